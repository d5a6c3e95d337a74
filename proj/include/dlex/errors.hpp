#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dlex {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula or knowledge-base text. `position` is a 0-based byte
/// offset into the formula text, or a 1-based line number when `is_line`.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position, bool is_line = false)
        : Error(what), position_(position), is_line_(is_line) {}

    std::size_t position() const { return position_; }
    bool is_line() const { return is_line_; }

private:
    std::size_t position_;
    bool is_line_;
};

/// Two structurally equal defaults in one knowledge base.
class DuplicateDefaultError : public Error {
public:
    DuplicateDefaultError(const std::string& what, std::size_t first_line,
                          std::size_t second_line)
        : Error(what), first_line_(first_line), second_line_(second_line) {}

    std::size_t first_line() const { return first_line_; }
    std::size_t second_line() const { return second_line_; }

private:
    std::size_t first_line_;
    std::size_t second_line_;
};

/// A formula was evaluated against a world that does not assign one of its
/// variables.
class UnassignedVariableError : public Error {
public:
    using Error::Error;
};

/// A hard resource cap was exceeded. Caps are reported, never silently
/// approximated around.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& what, std::size_t cap, std::size_t got)
        : Error(what), cap_(cap), got_(got) {}

    std::size_t cap() const { return cap_; }
    std::size_t got() const { return got_; }

private:
    std::size_t cap_;
    std::size_t got_;
};

/// A default was passed that is not part of the knowledge base in play.
class ForeignDefaultError : public Error {
public:
    using Error::Error;
};

/// Seriousness tuples of different lengths were compared.
class LengthMismatchError : public Error {
public:
    using Error::Error;
};

/// An operation was invoked outside its stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Out-of-range argument to a generator or harness entry point.
class ParameterRangeError : public Error {
public:
    using Error::Error;
};

/// Two provably equivalent answer methods disagreed, or a guaranteed
/// property failed. Always an implementation bug, never a user error.
class InvariantViolationError : public Error {
public:
    using Error::Error;
};

} // namespace dlex
