#include "dlex/sat.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace dlex {

WorldSpace::WorldSpace(const std::set<std::string>& vars)
    : vars_(std::make_shared<std::vector<std::string>>(vars.begin(), vars.end())) {
    check_cap();
}

WorldSpace::WorldSpace(std::vector<std::string> sorted_vars)
    : vars_(std::make_shared<std::vector<std::string>>(std::move(sorted_vars))) {
    assert(std::is_sorted(vars_->begin(), vars_->end()));
    check_cap();
}

void WorldSpace::check_cap() const {
    if (vars_->size() > kMaxEnumerationVars)
        throw CapExceededError("world enumeration over " +
                                   std::to_string(vars_->size()) +
                                   " variables exceeds the cap of " +
                                   std::to_string(kMaxEnumerationVars),
                               kMaxEnumerationVars, vars_->size());
}

// ---------------------------------------------------------------------------
// Fast mode: constant folding, then a Tseitin encoding to clauses, then
// DPLL with unit propagation and splitting on the first unassigned literal.

namespace {

// Folds away Const nodes. Returns either a Const or a constant-free tree.
Formula fold_constants(const Formula& f) {
    switch (f.kind()) {
    case Kind::Var:
    case Kind::Const:
        return f;
    case Kind::Not: {
        Formula c = fold_constants(f.child());
        if (c.kind() == Kind::Const) return Formula::constant(!c.value());
        return Formula::negation(std::move(c));
    }
    default: {
        Formula l = fold_constants(f.lhs());
        Formula r = fold_constants(f.rhs());
        bool lc = l.kind() == Kind::Const;
        bool rc = r.kind() == Kind::Const;
        switch (f.kind()) {
        case Kind::And:
            if (lc) return l.value() ? r : Formula::constant(false);
            if (rc) return r.value() ? l : Formula::constant(false);
            return Formula::conjunction(std::move(l), std::move(r));
        case Kind::Or:
            if (lc) return l.value() ? Formula::constant(true) : r;
            if (rc) return r.value() ? Formula::constant(true) : l;
            return Formula::disjunction(std::move(l), std::move(r));
        case Kind::Implies:
            if (lc) return l.value() ? r : Formula::constant(true);
            if (rc) return r.value() ? Formula::constant(true)
                                     : Formula::negation(std::move(l));
            return Formula::implication(std::move(l), std::move(r));
        default: // Iff
            if (lc) return l.value() ? r : Formula::negation(std::move(r));
            if (rc) return r.value() ? l : Formula::negation(std::move(l));
            return Formula::equivalence(std::move(l), std::move(r));
        }
    }
    }
}

struct Cnf {
    int n_vars = 0;
    std::vector<std::vector<int>> clauses; // 1-based vars, sign = polarity
    std::unordered_map<std::string, int> var_ids;

    int fresh() { return ++n_vars; }

    int var_id(const std::string& name) {
        auto [it, inserted] = var_ids.try_emplace(name, 0);
        if (inserted) it->second = fresh();
        return it->second;
    }

    void add(std::vector<int> clause) { clauses.push_back(std::move(clause)); }
};

// Returns a literal equivalent to the (constant-free) subformula.
int tseitin(const Formula& f, Cnf& cnf) {
    switch (f.kind()) {
    case Kind::Var:
        return cnf.var_id(f.name());
    case Kind::Not:
        return -tseitin(f.child(), cnf);
    default: {
        int a = tseitin(f.lhs(), cnf);
        int b = tseitin(f.rhs(), cnf);
        int v = cnf.fresh();
        switch (f.kind()) {
        case Kind::And:
            cnf.add({-v, a});
            cnf.add({-v, b});
            cnf.add({v, -a, -b});
            break;
        case Kind::Or:
            cnf.add({-v, a, b});
            cnf.add({v, -a});
            cnf.add({v, -b});
            break;
        case Kind::Implies:
            cnf.add({-v, -a, b});
            cnf.add({v, a});
            cnf.add({v, -b});
            break;
        default: // Iff
            cnf.add({-v, -a, b});
            cnf.add({-v, a, -b});
            cnf.add({v, a, b});
            cnf.add({v, -a, -b});
            break;
        }
        return v;
    }
    }
}

enum : std::int8_t { kUnknown = 0, kTrue = 1, kFalse = -1 };

bool literal_true(int lit, const std::vector<std::int8_t>& assign) {
    return assign[static_cast<std::size_t>(std::abs(lit))] ==
           (lit > 0 ? kTrue : kFalse);
}

bool literal_false(int lit, const std::vector<std::int8_t>& assign) {
    return assign[static_cast<std::size_t>(std::abs(lit))] ==
           (lit > 0 ? kFalse : kTrue);
}

// Unit propagation; false on conflict.
bool propagate(const std::vector<std::vector<int>>& clauses,
               std::vector<std::int8_t>& assign) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& clause : clauses) {
            int unassigned = 0;
            int unit = 0;
            bool satisfied = false;
            for (int lit : clauses.empty() ? std::vector<int>{} : clause) {
                if (literal_true(lit, assign)) { satisfied = true; break; }
                if (!literal_false(lit, assign)) {
                    ++unassigned;
                    unit = lit;
                }
            }
            if (satisfied) continue;
            if (unassigned == 0) return false;
            if (unassigned == 1) {
                assign[static_cast<std::size_t>(std::abs(unit))] =
                    unit > 0 ? kTrue : kFalse;
                changed = true;
            }
        }
    }
    return true;
}

bool dpll(const std::vector<std::vector<int>>& clauses,
          std::vector<std::int8_t> assign) {
    if (!propagate(clauses, assign)) return false;
    for (std::size_t v = 1; v < assign.size(); ++v) {
        if (assign[v] != kUnknown) continue;
        for (std::int8_t value : {kTrue, kFalse}) {
            std::vector<std::int8_t> branch = assign;
            branch[v] = value;
            if (dpll(clauses, std::move(branch))) return true;
        }
        return false;
    }
    return true;
}

} // namespace

bool is_satisfiable(const std::vector<Formula>& fs) {
    Cnf cnf;
    std::vector<int> roots;
    for (const Formula& f : fs) {
        Formula folded = fold_constants(f);
        if (folded.kind() == Kind::Const) {
            if (!folded.value()) return false;
            continue;
        }
        roots.push_back(tseitin(folded, cnf));
    }
    for (int lit : roots) cnf.add({lit});
    if (cnf.clauses.empty()) return true;
    return dpll(cnf.clauses,
                std::vector<std::int8_t>(static_cast<std::size_t>(cnf.n_vars) + 1,
                                         kUnknown));
}

bool is_satisfiable_oracle(const std::vector<Formula>& fs) {
    std::set<std::string> vars;
    for (const Formula& f : fs) {
        auto fv = variables(f);
        vars.insert(fv.begin(), fv.end());
    }
    WorldSpace space(vars);
    for (const World& w : space) {
        bool all = true;
        for (const Formula& f : fs) {
            if (!evaluate(f, w)) { all = false; break; }
        }
        if (all) return true;
    }
    return false;
}

bool entails(const std::vector<Formula>& premises, const Formula& conclusion) {
    std::vector<Formula> fs = premises;
    fs.push_back(Formula::negation(conclusion));
    return !is_satisfiable(fs);
}

} // namespace dlex
