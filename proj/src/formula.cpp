#include "dlex/formula.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

namespace dlex {

struct Formula::Node {
    Kind kind;
    bool value = false;                  // Const
    std::string name;                    // Var
    std::optional<Formula> lhs;          // Not stores its child here
    std::optional<Formula> rhs;
    std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_ident_start(char c) {
    return c == '_' || std::isalpha(static_cast<unsigned char>(c));
}

bool is_ident_char(char c) {
    return c == '_' || std::isalnum(static_cast<unsigned char>(c));
}

} // namespace

Formula Formula::var(std::string name) {
    if (name.empty() || !is_ident_start(name[0]) ||
        !std::all_of(name.begin(), name.end(), is_ident_char)) {
        throw ParseError("invalid variable name: '" + name + "'", 0);
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Var;
    node->name = std::move(name);
    node->hash = mix(static_cast<std::size_t>(Kind::Var),
                     std::hash<std::string>{}(node->name));
    return Formula(std::move(node));
}

Formula Formula::constant(bool value) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Const;
    node->value = value;
    node->hash = mix(static_cast<std::size_t>(Kind::Const), value ? 2 : 1);
    return Formula(std::move(node));
}

Formula Formula::negation(Formula f) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Not;
    node->hash = mix(static_cast<std::size_t>(Kind::Not), f.hash());
    node->lhs = std::move(f);
    return Formula(std::move(node));
}

static std::shared_ptr<const Formula::Node> binary_node(Kind kind, Formula lhs,
                                                        Formula rhs) {
    auto node = std::make_shared<Formula::Node>();
    node->kind = kind;
    node->hash = mix(mix(static_cast<std::size_t>(kind), lhs.hash()), rhs.hash());
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    return Formula(binary_node(Kind::And, std::move(lhs), std::move(rhs)));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
    return Formula(binary_node(Kind::Or, std::move(lhs), std::move(rhs)));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
    return Formula(binary_node(Kind::Implies, std::move(lhs), std::move(rhs)));
}
Formula Formula::equivalence(Formula lhs, Formula rhs) {
    return Formula(binary_node(Kind::Iff, std::move(lhs), std::move(rhs)));
}

Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::name() const {
    assert(node_->kind == Kind::Var);
    return node_->name;
}

bool Formula::value() const {
    assert(node_->kind == Kind::Const);
    return node_->value;
}

const Formula& Formula::child() const {
    assert(node_->kind == Kind::Not);
    return *node_->lhs;
}

const Formula& Formula::lhs() const { return *node_->lhs; }
const Formula& Formula::rhs() const { return *node_->rhs; }

std::size_t Formula::hash() const { return node_->hash; }

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (node_->hash != other.node_->hash || node_->kind != other.node_->kind)
        return false;
    switch (node_->kind) {
    case Kind::Var: return node_->name == other.node_->name;
    case Kind::Const: return node_->value == other.node_->value;
    case Kind::Not: return child() == other.child();
    default: return lhs() == other.lhs() && rhs() == other.rhs();
    }
}

// ---------------------------------------------------------------------------
// Printing. Precedence levels, tightest last: <-> 1, -> 2, | 3, & 4, ! 5.
// `&`/`|` chains render bare only when they re-parse to the same left fold;
// `->`/`<->` are right-associative.

namespace {

int precedence(Kind k) {
    switch (k) {
    case Kind::Iff: return 1;
    case Kind::Implies: return 2;
    case Kind::Or: return 3;
    case Kind::And: return 4;
    case Kind::Not: return 5;
    default: return 6;
    }
}

void print(const Formula& f, int min_prec, std::string& out) {
    int prec = precedence(f.kind());
    bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (f.kind()) {
    case Kind::Var:
        out += f.name();
        break;
    case Kind::Const:
        out += f.value() ? "true" : "false";
        break;
    case Kind::Not:
        out += '!';
        print(f.child(), prec, out);
        break;
    case Kind::And:
    case Kind::Or: {
        print(f.lhs(), prec, out);
        out += f.kind() == Kind::And ? " & " : " | ";
        print(f.rhs(), prec + 1, out);
        break;
    }
    case Kind::Implies:
    case Kind::Iff: {
        print(f.lhs(), prec + 1, out);
        out += f.kind() == Kind::Implies ? " -> " : " <-> ";
        print(f.rhs(), prec, out);
        break;
    }
    }
    if (parens) out += ')';
}

} // namespace

std::string Formula::str() const {
    std::string out;
    print(*this, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser.

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula parse() {
        skip_space();
        if (pos_ >= text_.size())
            throw ParseError("empty formula", pos_);
        Formula f = parse_iff();
        skip_space();
        if (pos_ < text_.size())
            throw ParseError(std::string("unexpected trailing input '") +
                                 text_[pos_] + "'",
                             pos_);
        return f;
    }

private:
    Formula parse_iff() {
        Formula lhs = parse_impl();
        if (eat("<->")) return Formula::equivalence(std::move(lhs), parse_iff());
        return lhs;
    }

    Formula parse_impl() {
        Formula lhs = parse_or();
        // "<->" must not be split into "<-" junk; eat() matches "->" only
        // when not preceded by '<', which lexing order already guarantees.
        if (eat("->")) return Formula::implication(std::move(lhs), parse_impl());
        return lhs;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (true) {
            skip_space();
            if (peek() == '|') {
                ++pos_;
                f = Formula::disjunction(std::move(f), parse_and());
            } else {
                return f;
            }
        }
    }

    Formula parse_and() {
        Formula f = parse_not();
        while (true) {
            skip_space();
            if (peek() == '&') {
                ++pos_;
                f = Formula::conjunction(std::move(f), parse_not());
            } else {
                return f;
            }
        }
    }

    Formula parse_not() {
        skip_space();
        if (peek() == '!') {
            ++pos_;
            return Formula::negation(parse_not());
        }
        return parse_atom();
    }

    Formula parse_atom() {
        skip_space();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of formula", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Formula f = parse_iff();
            skip_space();
            if (peek() != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return f;
        }
        if (is_ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "true") return Formula::constant(true);
            if (name == "false") return Formula::constant(false);
            return Formula::var(std::move(name));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    // Consumes `token` if it is next (after whitespace).
    bool eat(std::string_view token) {
        skip_space();
        if (text_.substr(pos_).starts_with(token)) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
    case Kind::Var: out.insert(f.name()); break;
    case Kind::Const: break;
    case Kind::Not: collect_variables(f.child(), out); break;
    default:
        collect_variables(f.lhs(), out);
        collect_variables(f.rhs(), out);
    }
}

} // namespace

std::set<std::string> variables(const Formula& f) {
    std::set<std::string> out;
    collect_variables(f, out);
    return out;
}

// ---------------------------------------------------------------------------
// Worlds.

World::World(std::shared_ptr<const std::vector<std::string>> vars, std::uint64_t bits)
    : vars_(std::move(vars)), bits_(bits) {
    assert(vars_ && std::is_sorted(vars_->begin(), vars_->end()));
}

World World::from_map(const std::map<std::string, bool>& assignment) {
    auto vars = std::make_shared<std::vector<std::string>>();
    vars->reserve(assignment.size());
    for (const auto& [name, _] : assignment) vars->push_back(name);
    std::uint64_t bits = 0;
    std::size_t n = vars->size();
    std::size_t j = 0;
    for (const auto& [_, val] : assignment) {
        if (val) bits |= std::uint64_t{1} << (n - 1 - j);
        ++j;
    }
    return World(std::move(vars), bits);
}

bool World::contains(std::string_view var) const {
    return std::binary_search(vars_->begin(), vars_->end(), var);
}

bool World::value(std::string_view var) const {
    auto it = std::lower_bound(vars_->begin(), vars_->end(), var);
    if (it == vars_->end() || *it != var)
        throw UnassignedVariableError("variable '" + std::string(var) +
                                      "' is not assigned in this world");
    std::size_t j = static_cast<std::size_t>(it - vars_->begin());
    return (bits_ >> (vars_->size() - 1 - j)) & 1;
}

std::string World::str() const {
    std::string out = "{";
    for (std::size_t j = 0; j < vars_->size(); ++j) {
        if (j) out += ", ";
        out += (*vars_)[j];
        out += '=';
        out += ((bits_ >> (vars_->size() - 1 - j)) & 1) ? '1' : '0';
    }
    out += '}';
    return out;
}

bool evaluate(const Formula& f, const World& w) {
    switch (f.kind()) {
    case Kind::Var: return w.value(f.name());
    case Kind::Const: return f.value();
    case Kind::Not: return !evaluate(f.child(), w);
    case Kind::And: return evaluate(f.lhs(), w) && evaluate(f.rhs(), w);
    case Kind::Or: return evaluate(f.lhs(), w) || evaluate(f.rhs(), w);
    case Kind::Implies: return !evaluate(f.lhs(), w) || evaluate(f.rhs(), w);
    case Kind::Iff: return evaluate(f.lhs(), w) == evaluate(f.rhs(), w);
    }
    return false; // unreachable
}

} // namespace dlex
