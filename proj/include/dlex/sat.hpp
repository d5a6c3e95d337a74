#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dlex/formula.hpp"

namespace dlex {

/// Hard cap on exhaustive world enumeration (16.7M worlds). The
/// backtracking decision procedure has no cap.
inline constexpr std::size_t kMaxEnumerationVars = 24;

/// All 2^n total assignments over a fixed variable set, in a deterministic
/// order: variables sorted lexicographically, false before true, with the
/// last variable cycling fastest.
class WorldSpace {
public:
    explicit WorldSpace(const std::set<std::string>& vars);
    explicit WorldSpace(std::vector<std::string> sorted_vars);

    std::size_t variable_count() const { return vars_->size(); }
    std::uint64_t size() const { return std::uint64_t{1} << vars_->size(); }
    World world(std::uint64_t index) const { return World(vars_, index); }
    const std::vector<std::string>& variable_names() const { return *vars_; }

    class const_iterator {
    public:
        const_iterator(const WorldSpace* space, std::uint64_t index)
            : space_(space), index_(index) {}
        World operator*() const { return space_->world(index_); }
        const_iterator& operator++() { ++index_; return *this; }
        bool operator!=(const const_iterator& o) const { return index_ != o.index_; }
    private:
        const WorldSpace* space_;
        std::uint64_t index_;
    };

    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, size()}; }

private:
    void check_cap() const;
    std::shared_ptr<const std::vector<std::string>> vars_;
};

/// True iff some world over the variables of `fs` satisfies every member.
/// Backtracking decision procedure (unit propagation plus splitting on a
/// literal); no variable cap. The empty set is satisfiable.
bool is_satisfiable(const std::vector<Formula>& fs);

/// Same contract, decided by exhaustive world enumeration. Subject to the
/// enumeration cap; kept as the independent cross-check for the fast mode.
bool is_satisfiable_oracle(const std::vector<Formula>& fs);

/// True iff premises ∪ {¬conclusion} is unsatisfiable.
bool entails(const std::vector<Formula>& premises, const Formula& conclusion);

} // namespace dlex
