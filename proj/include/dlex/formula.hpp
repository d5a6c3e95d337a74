#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dlex/errors.hpp"

namespace dlex {

enum class Kind : std::uint8_t { Var, Const, Not, And, Or, Implies, Iff };

/// Immutable propositional formula. Copies share structure; operator==
/// is structural equality. Safe to share across threads once built.
class Formula {
public:
    static Formula var(std::string name);
    static Formula constant(bool value);
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula equivalence(Formula lhs, Formula rhs);

    Kind kind() const;
    const std::string& name() const; // Var
    bool value() const;              // Const
    const Formula& child() const;    // Not
    const Formula& lhs() const;      // binary connectives
    const Formula& rhs() const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

    std::size_t hash() const;

    /// Parseable text; parse_formula(str()) rebuilds the identical tree.
    std::string str() const;

    struct Node; // opaque; defined in formula.cpp

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Grammar, loosest binding first (`->` and `<->` right-associative,
/// `&` and `|` folded left):
///
///   iff  := impl ("<->" impl)*
///   impl := or ("->" or)*
///   or   := and ("|" and)*
///   and  := not ("&" not)*
///   not  := "!" not | atom
///   atom := "true" | "false" | ident | "(" iff ")"
///
/// Identifiers match [A-Za-z_][A-Za-z0-9_]*.
Formula parse_formula(std::string_view text);

/// Exactly the variable names occurring in f.
std::set<std::string> variables(const Formula& f);

/// A total truth assignment over a fixed, sorted variable set. The
/// assignment is packed into a word: variable j (in sorted order, out of n)
/// holds bit (n-1-j), so that counting bits upward enumerates assignments
/// with the lexicographically last variable cycling fastest.
class World {
public:
    World(std::shared_ptr<const std::vector<std::string>> vars, std::uint64_t bits);

    static World from_map(const std::map<std::string, bool>& assignment);

    /// Value of `var`; throws UnassignedVariableError if absent.
    bool value(std::string_view var) const;
    bool contains(std::string_view var) const;

    const std::vector<std::string>& variable_names() const { return *vars_; }
    std::uint64_t bits() const { return bits_; }

    std::string str() const; // e.g. "{p=1, q=0}"

private:
    std::shared_ptr<const std::vector<std::string>> vars_;
    std::uint64_t bits_;
};

/// Classical two-valued satisfaction; every variable of f must be assigned.
bool evaluate(const Formula& f, const World& w);

} // namespace dlex
