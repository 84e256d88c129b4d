#pragma once

#include <string>

#include "polar/program.hpp"

namespace polar {

inline std::string to_string(const Term& t) { return t.name(); }

inline std::string to_string(const Atom& a) {
    std::string out = a.predicate;
    if (!a.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i) out += ',';
            out += a.args[i].name();
        }
        out += ')';
    }
    return out;
}

inline std::string to_string(const Literal& l) {
    return l.negated ? "not " + to_string(l.atom) : to_string(l.atom);
}

// Raw rendering, variables and body order as stored.
inline std::string to_string(const Rule& r) {
    std::string out = to_string(r.head());
    if (!r.body().empty()) {
        out += ":- ";
        for (std::size_t i = 0; i < r.body().size(); ++i) {
            if (i) out += ", ";
            out += to_string(r.body()[i]);
        }
    }
    out += '.';
    return out;
}

// Canonical rendering: variables renamed A, B, C, ... and body sorted.
inline std::string print_rule(const Rule& r) { return to_string(r.canonical()); }

// Deterministic program text: canonically ordered rules, one per line.
// The empty program prints as the empty string.
inline std::string print_program(const Program& p) {
    std::string out;
    for (const Rule& r : p.rules()) {
        out += print_rule(r);
        out += '\n';
    }
    return out;
}

}  // namespace polar
