#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "polar/errors.hpp"
#include "polar/program.hpp"

namespace polar {

// Safety policy applied after parsing.
//   strict:     every head/negated-literal variable occurs in a positive body
//               literal (range restriction; the default for background files).
//   head_bound: negated-literal variables occur in the head or a positive body
//               literal; head variables may range over the ground domain.
//               Learned hypotheses live in this fragment.
//   none:       no check.
enum class Safety { strict, head_bound, none };

namespace detail {

struct Token {
    enum Kind { name, lparen, rparen, comma, period, arrow, end } kind;
    std::string text;
    std::size_t line, col;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        if (pos_ >= text_.size()) return make(Token::end, "");
        const char c = text_[pos_];
        if (c == '(') return advance(Token::lparen, 1);
        if (c == ')') return advance(Token::rparen, 1);
        if (c == ',') return advance(Token::comma, 1);
        if (c == '.') return advance(Token::period, 1);
        if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-')
            return advance(Token::arrow, 2);
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            Token t = make(Token::name, "");
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_'))
                bump();
            t.text = std::string(text_.substr(start, pos_ - start));
            return t;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    Token make(Token::Kind k, std::string s) const { return Token{k, std::move(s), line_, col_}; }

    Token advance(Token::Kind k, std::size_t len) {
        Token t = make(k, std::string(text_.substr(pos_, len)));
        for (std::size_t i = 0; i < len; ++i) bump();
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    std::vector<Rule> parse_rules() {
        std::vector<Rule> rules;
        while (cur_.kind != Token::end) rules.push_back(parse_rule());
        return rules;
    }

    Atom parse_single_atom() {
        Atom a = parse_atom();
        expect(Token::end, "end of input");
        return a;
    }

private:
    Rule parse_rule() {
        anon_counter_ = 0;
        Atom head = parse_atom();
        std::vector<Literal> body;
        if (cur_.kind == Token::arrow) {
            shift();
            body.push_back(parse_literal());
            while (cur_.kind == Token::comma) {
                shift();
                body.push_back(parse_literal());
            }
        }
        expect(Token::period, "'.'");
        return Rule(std::move(head), std::move(body));
    }

    Literal parse_literal() {
        if (cur_.kind == Token::name && cur_.text == "not") {
            shift();
            return Literal{parse_atom(), true};
        }
        return Literal{parse_atom(), false};
    }

    Atom parse_atom() {
        Token name = expect(Token::name, "predicate name");
        if (std::isupper(static_cast<unsigned char>(name.text.front())) ||
            name.text.front() == '_')
            throw ParseError(name.line, name.col,
                             "predicate name must start lowercase: '" + name.text + "'");
        Atom atom{name.text, {}};
        if (cur_.kind == Token::lparen) {
            shift();
            atom.args.push_back(parse_term());
            while (cur_.kind == Token::comma) {
                shift();
                atom.args.push_back(parse_term());
            }
            expect(Token::rparen, "')'");
        }
        return atom;
    }

    Term parse_term() {
        Token t = expect(Token::name, "term");
        if (cur_.kind == Token::lparen)
            throw ParseError(cur_.line, cur_.col, "function symbols are not supported");
        if (t.text == "_")  // each bare underscore is a fresh variable
            return Term::variable("_#" + std::to_string(++anon_counter_));
        return Term::from_name(t.text);
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (cur_.kind != kind)
            throw ParseError(cur_.line, cur_.col,
                             "expected " + what + ", got '" +
                                 (cur_.kind == Token::end ? "<eof>" : cur_.text) + "'");
        Token t = cur_;
        shift();
        return t;
    }

    void shift() { cur_ = lexer_.next(); }

    Lexer lexer_;
    Token cur_{Token::end, "", 1, 1};
    int anon_counter_ = 0;
};

inline std::string describe_rule_for_error(const Rule& r) {
    std::string out = r.head().predicate;
    if (r.head().arity() > 0) out += "/" + std::to_string(r.head().arity());
    return out;
}

}  // namespace detail

inline void check_safety(const Rule& rule, Safety policy) {
    switch (policy) {
        case Safety::none:
            return;
        case Safety::strict:
            if (!rule.is_range_restricted())
                throw UnsafeRuleError(
                    "unsafe rule (head or negated variable lacks a positive "
                    "occurrence) in rule with head " +
                    detail::describe_rule_for_error(rule));
            return;
        case Safety::head_bound:
            if (!rule.is_head_bound_safe())
                throw UnsafeRuleError(
                    "unsafe rule (negated variable unbound by head or positive "
                    "literals) in rule with head " +
                    detail::describe_rule_for_error(rule));
            return;
    }
}

inline Program parse_program(std::string_view text, Safety policy = Safety::strict) {
    detail::Parser parser(text);
    std::vector<Rule> rules = parser.parse_rules();
    for (const Rule& r : rules) check_safety(r, policy);
    return Program(std::move(rules));
}

inline Atom parse_atom(std::string_view text) {
    detail::Parser parser(text);
    return parser.parse_single_atom();
}

}  // namespace polar
