#pragma once

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polar/errors.hpp"

namespace polar {

// A term is a variable (name starts uppercase or '_') or a constant
// (anything else). No function symbols.
class Term {
public:
    static Term variable(std::string name) { return Term(std::move(name), true); }
    static Term constant(std::string name) { return Term(std::move(name), false); }

    // Classify by first character, Prolog-style.
    static Term from_name(std::string name) {
        assert(!name.empty());
        const char c = name.front();
        const bool var = (std::isupper(static_cast<unsigned char>(c)) != 0) || c == '_';
        return Term(std::move(name), var);
    }

    bool is_variable() const { return variable_; }
    bool is_constant() const { return !variable_; }
    const std::string& name() const { return name_; }

    friend bool operator==(const Term& a, const Term& b) {
        return a.variable_ == b.variable_ && a.name_ == b.name_;
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
    friend bool operator<(const Term& a, const Term& b) {
        if (a.variable_ != b.variable_) return a.variable_ > b.variable_;  // variables first
        return a.name_ < b.name_;
    }

private:
    Term(std::string name, bool variable) : name_(std::move(name)), variable_(variable) {}
    std::string name_;
    bool variable_;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    std::size_t arity() const { return args.size(); }
    bool is_ground() const {
        return std::none_of(args.begin(), args.end(),
                            [](const Term& t) { return t.is_variable(); });
    }

    friend bool operator==(const Atom& a, const Atom& b) {
        return a.predicate == b.predicate && a.args == b.args;
    }
    friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
    friend bool operator<(const Atom& a, const Atom& b) {
        if (a.predicate != b.predicate) return a.predicate < b.predicate;
        if (a.args.size() != b.args.size()) return a.args.size() < b.args.size();
        return a.args < b.args;
    }
};

struct Literal {
    Atom atom;
    bool negated = false;

    friend bool operator==(const Literal& a, const Literal& b) {
        return a.negated == b.negated && a.atom == b.atom;
    }
    friend bool operator!=(const Literal& a, const Literal& b) { return !(a == b); }
    friend bool operator<(const Literal& a, const Literal& b) {
        if (a.negated != b.negated) return !a.negated;  // positive literals first
        return a.atom < b.atom;
    }
};

// Variable -> term map. Identity bindings are dropped on insert; application
// is a single simultaneous pass, so {X/Y, Y/Z} maps p(X,Y) to p(Y,Z).
class Substitution {
public:
    Substitution() = default;
    Substitution(std::initializer_list<std::pair<std::string, Term>> bindings) {
        for (auto& [v, t] : bindings) bind(v, t);
    }

    void bind(const std::string& var, Term value) {
        if (value.is_variable() && value.name() == var) return;
        bindings_.insert_or_assign(var, std::move(value));
    }

    const Term* lookup(const std::string& var) const {
        auto it = bindings_.find(var);
        return it == bindings_.end() ? nullptr : &it->second;
    }

    bool empty() const { return bindings_.empty(); }
    std::size_t size() const { return bindings_.size(); }
    const std::map<std::string, Term>& bindings() const { return bindings_; }

    Term apply(const Term& t) const {
        if (t.is_variable()) {
            if (const Term* bound = lookup(t.name())) return *bound;
        }
        return t;
    }

    Atom apply(const Atom& a) const {
        Atom out{a.predicate, {}};
        out.args.reserve(a.args.size());
        for (const Term& t : a.args) out.args.push_back(apply(t));
        return out;
    }

    Literal apply(const Literal& l) const { return Literal{apply(l.atom), l.negated}; }

private:
    std::map<std::string, Term> bindings_;
};

namespace detail {

inline void encode_atom(const Atom& atom, const std::map<std::string, int>& var_index,
                        std::string& out) {
    out += atom.predicate;
    out += '/';
    out += std::to_string(atom.arity());
    out += '(';
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
        if (i) out += ',';
        const Term& t = atom.args[i];
        if (t.is_variable()) {
            out += '#';
            out += std::to_string(var_index.at(t.name()));
        } else {
            out += '$';
            out += t.name();
        }
    }
    out += ')';
}

inline std::string pad2(std::size_t n) {
    std::string s = std::to_string(n);
    return s.size() < 2 ? "0" + s : s;
}

inline std::vector<std::string> encode_body(const std::vector<Literal>& body,
                                            const std::map<std::string, int>& var_index) {
    std::vector<std::string> lits;
    lits.reserve(body.size());
    for (const Literal& l : body) {
        std::string enc(1, l.negated ? '1' : '0');
        encode_atom(l.atom, var_index, enc);
        lits.push_back(std::move(enc));
    }
    std::sort(lits.begin(), lits.end());
    return lits;
}

// Head-first encoding; minimizing this picks the variable numbering used for
// canonical display (head variables come out as A, B, ... in order).
inline std::string encode_rule_display(const Atom& head, const std::vector<Literal>& body,
                                       const std::map<std::string, int>& var_index) {
    std::string out;
    encode_atom(head, var_index, out);
    out += ":-";
    for (const std::string& l : encode_body(body, var_index)) {
        out += l;
        out += ',';
    }
    return out;
}

// Key ordering: head predicate, arity, body length, then the sorted literal
// sequence; the head argument pattern breaks remaining ties.
inline std::string encode_rule(const Atom& head, const std::vector<Literal>& body,
                               const std::map<std::string, int>& var_index) {
    std::string out = head.predicate;
    out += '/';
    out += pad2(head.arity());
    out += ';';
    out += pad2(body.size());
    out += ';';
    for (const std::string& l : encode_body(body, var_index)) {
        out += l;
        out += ',';
    }
    out += ":-";
    encode_atom(head, var_index, out);
    return out;
}

}  // namespace detail

// A normal rule: head atom plus a body of (possibly negated) literals.
// The body is kept as given except that exact duplicate literals collapse.
// Rules carry a canonical key (variables renamed to a lexicographically
// minimal numbering, body sorted) used for variant tests and set semantics.
class Rule {
public:
    Rule(Atom head, std::vector<Literal> body) : head_(std::move(head)) {
        for (auto& l : body) {
            if (std::find(body_.begin(), body_.end(), l) == body_.end())
                body_.push_back(std::move(l));
        }
        compute_key();
    }

    const Atom& head() const { return head_; }
    const std::vector<Literal>& body() const { return body_; }
    const std::string& head_symbol() const { return head_.predicate; }
    bool is_fact() const { return body_.empty(); }

    std::set<std::string> body_pos_symbols() const {
        std::set<std::string> out;
        for (const Literal& l : body_)
            if (!l.negated) out.insert(l.atom.predicate);
        return out;
    }

    std::set<std::string> body_neg_symbols() const {
        std::set<std::string> out;
        for (const Literal& l : body_)
            if (l.negated) out.insert(l.atom.predicate);
        return out;
    }

    // Distinct variables in appearance order (head first, then body).
    std::vector<std::string> variables() const {
        std::vector<std::string> out;
        auto add = [&](const Atom& a) {
            for (const Term& t : a.args)
                if (t.is_variable() &&
                    std::find(out.begin(), out.end(), t.name()) == out.end())
                    out.push_back(t.name());
        };
        add(head_);
        for (const Literal& l : body_) add(l.atom);
        return out;
    }

    // Every variable in the head or in a negated body literal occurs in a
    // non-negated body literal.
    bool is_range_restricted() const {
        std::set<std::string> positive;
        for (const Literal& l : body_)
            if (!l.negated)
                for (const Term& t : l.atom.args)
                    if (t.is_variable()) positive.insert(t.name());
        for (const Term& t : head_.args)
            if (t.is_variable() && !positive.count(t.name())) return false;
        for (const Literal& l : body_)
            if (l.negated)
                for (const Term& t : l.atom.args)
                    if (t.is_variable() && !positive.count(t.name())) return false;
        return true;
    }

    // Every variable in a negated body literal occurs in the head or in a
    // non-negated body literal. Head variables may stay unbound; evaluation
    // ranges them over the ground domain.
    bool is_head_bound_safe() const {
        std::set<std::string> bound;
        for (const Term& t : head_.args)
            if (t.is_variable()) bound.insert(t.name());
        for (const Literal& l : body_)
            if (!l.negated)
                for (const Term& t : l.atom.args)
                    if (t.is_variable()) bound.insert(t.name());
        for (const Literal& l : body_)
            if (l.negated)
                for (const Term& t : l.atom.args)
                    if (t.is_variable() && !bound.count(t.name())) return false;
        return true;
    }

    const std::string& key() const { return key_; }

    // Canonical twin: variables renamed per the minimizing numbering, body
    // sorted. Printing and goldens rely on this form.
    Rule canonical() const {
        Substitution rename;
        for (const auto& [var, idx] : canonical_index_)
            rename.bind(var, Term::variable(canonical_var_name(idx)));
        Atom head = rename.apply(head_);
        std::vector<Literal> body;
        body.reserve(body_.size());
        for (const Literal& l : body_) body.push_back(rename.apply(l));
        std::sort(body.begin(), body.end());
        return Rule(std::move(head), std::move(body));
    }

    static std::string canonical_var_name(int idx) {
        if (idx < 26) return std::string(1, static_cast<char>('A' + idx));
        return "V" + std::to_string(idx);
    }

    friend bool operator==(const Rule& a, const Rule& b) { return a.key_ == b.key_; }
    friend bool operator!=(const Rule& a, const Rule& b) { return !(a == b); }
    friend bool operator<(const Rule& a, const Rule& b) { return a.key_ < b.key_; }

private:
    void compute_key() {
        std::vector<std::string> vars = variables();
        const std::size_t n = vars.size();
        if (n > 9)
            throw Error("rule has too many distinct variables to canonicalize: " +
                        std::to_string(n));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        bool first = true;
        std::string best;
        do {
            std::map<std::string, int> index;
            for (std::size_t i = 0; i < n; ++i) index[vars[i]] = perm[i];
            std::string enc = detail::encode_rule_display(head_, body_, index);
            if (first || enc < best) {
                best = std::move(enc);
                canonical_index_ = index;
                first = false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        key_ = detail::encode_rule(head_, body_, canonical_index_);
    }

    Atom head_;
    std::vector<Literal> body_;
    std::string key_;
    std::map<std::string, int> canonical_index_;
};

inline bool is_variant(const Rule& a, const Rule& b) { return a.key() == b.key(); }

inline Rule apply_substitution(const Rule& rule, const Substitution& s) {
    Atom head = s.apply(rule.head());
    std::vector<Literal> body;
    body.reserve(rule.body().size());
    for (const Literal& l : rule.body()) body.push_back(s.apply(l));
    return Rule(std::move(head), std::move(body));
}

// A normal logic program: a set of rules with set semantics modulo variable
// renaming. Rules are kept sorted by canonical key. Predicate overloading
// (one symbol with two arities) is rejected.
class Program {
public:
    Program() = default;

    explicit Program(std::vector<Rule> rules) {
        std::sort(rules.begin(), rules.end());
        rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
        rules_ = std::move(rules);
        check_arities();
    }

    const std::vector<Rule>& rules() const { return rules_; }
    bool empty() const { return rules_.empty(); }
    std::size_t size() const { return rules_.size(); }

    std::set<std::string> head_symbols() const {
        std::set<std::string> out;
        for (const Rule& r : rules_) out.insert(r.head_symbol());
        return out;
    }

    std::set<std::string> body_symbols() const {
        std::set<std::string> out;
        for (const Rule& r : rules_)
            for (const Literal& l : r.body()) out.insert(l.atom.predicate);
        return out;
    }

    std::set<std::string> symbols() const {
        std::set<std::string> out = head_symbols();
        auto body = body_symbols();
        out.insert(body.begin(), body.end());
        return out;
    }

    std::vector<Rule> facts() const {
        std::vector<Rule> out;
        for (const Rule& r : rules_)
            if (r.is_fact()) out.push_back(r);
        return out;
    }

    std::set<std::string> constants() const {
        std::set<std::string> out;
        auto add = [&](const Atom& a) {
            for (const Term& t : a.args)
                if (t.is_constant()) out.insert(t.name());
        };
        for (const Rule& r : rules_) {
            add(r.head());
            for (const Literal& l : r.body()) add(l.atom);
        }
        return out;
    }

    bool contains_variant(const Rule& r) const {
        return std::binary_search(rules_.begin(), rules_.end(), r);
    }

    std::map<std::string, std::size_t> predicate_arities() const {
        std::map<std::string, std::size_t> arities;
        auto note = [&](const Atom& a) { arities.emplace(a.predicate, a.arity()); };
        for (const Rule& r : rules_) {
            note(r.head());
            for (const Literal& l : r.body()) note(l.atom);
        }
        return arities;
    }

    friend bool operator==(const Program& a, const Program& b) {
        if (a.rules_.size() != b.rules_.size()) return false;
        for (std::size_t i = 0; i < a.rules_.size(); ++i)
            if (a.rules_[i].key() != b.rules_[i].key()) return false;
        return true;
    }
    friend bool operator!=(const Program& a, const Program& b) { return !(a == b); }

    static Program merge(const Program& a, const Program& b) {
        std::vector<Rule> rules = a.rules_;
        rules.insert(rules.end(), b.rules_.begin(), b.rules_.end());
        return Program(std::move(rules));
    }

private:
    void check_arities() {
        std::map<std::string, std::size_t> arities;
        auto check = [&](const Atom& a) {
            auto [it, inserted] = arities.emplace(a.predicate, a.arity());
            if (!inserted && it->second != a.arity())
                throw ArityConflictError("predicate '" + a.predicate +
                                         "' used with arities " +
                                         std::to_string(it->second) + " and " +
                                         std::to_string(a.arity()));
        };
        for (const Rule& r : rules_) {
            check(r.head());
            for (const Literal& l : r.body()) check(l.atom);
        }
    }

    std::vector<Rule> rules_;
};

}  // namespace polar
