#pragma once

// Surface syntax for tensor expressions:
//   atoms     rationals ("2", "1/2"), the Casimir symbol C, words "e1.e2",
//             generators J1..J3, parenthesised expressions
//   operators ^ (wedge; or power when the right operand is an integer and
//             the left is a scalar), * (tensor product), unary -, binary + -
//   precedence: ^ > * > unary - > binary + -, products left-associative.
// parse(print(x)) is the identity on every element the printer emits.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinclif/element.hpp"
#include "spinclif/tensor_ops.hpp"
#include "spinclif/transform.hpp"

namespace spinclif {

class ParseError : public std::runtime_error {
public:
    ParseError(size_t position, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(position + 1) + ": " + what),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

// vectors: e1..en are basis letters and J1..J3 expand to generator bivectors
//          (weak convention; requires dim 3).
// generators: J1..J3 are the basis letters themselves; e-letters are invalid.
enum class ParseMode { vectors, generators };

namespace detail {

struct Token {
    enum Kind { number, casimir, word, star, caret, plus, minus, lparen, rparen, end };
    Kind kind;
    size_t pos;
    Rational value;                       // number
    std::vector<std::pair<char, int>> letters;  // word: ('e' or 'J', index)
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    auto letter_at = [&](size_t p) { return p < src.size() ? src[p] : '\0'; };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (std::isdigit(static_cast<unsigned char>(letter_at(j)))) ++j;
            std::string num = src.substr(i, j - i);
            if (letter_at(j) == '/' && std::isdigit(static_cast<unsigned char>(letter_at(j + 1)))) {
                size_t k = j + 1;
                while (std::isdigit(static_cast<unsigned char>(letter_at(k)))) ++k;
                std::string den = src.substr(j + 1, k - j - 1);
                out.push_back({Token::number, start, Rational(BigInt(num), BigInt(den)), {}});
                i = k;
            } else {
                out.push_back({Token::number, start, Rational(BigInt(num)), {}});
                i = j;
            }
            continue;
        }
        if (c == 'e' || c == 'J') {
            Token t{Token::word, start, Rational(0), {}};
            while (true) {
                char base = letter_at(i);
                if (base != 'e' && base != 'J') throw ParseError(i, "expected basis letter");
                if (!std::isdigit(static_cast<unsigned char>(letter_at(i + 1))))
                    throw ParseError(i, "basis letter needs an index");
                size_t j = i + 1;
                int idx = 0;
                while (std::isdigit(static_cast<unsigned char>(letter_at(j)))) {
                    idx = idx * 10 + (letter_at(j) - '0');
                    ++j;
                }
                t.letters.emplace_back(base, idx);
                if (letter_at(j) == '.') {
                    i = j + 1;
                    continue;
                }
                i = j;
                break;
            }
            out.push_back(std::move(t));
            continue;
        }
        if (c == 'C') {
            out.push_back({Token::casimir, start, Rational(0), {}});
            ++i;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '*': k = Token::star; break;
            case '^': k = Token::caret; break;
            case '+': k = Token::plus; break;
            case '-': k = Token::minus; break;
            case '(': k = Token::lparen; break;
            case ')': k = Token::rparen; break;
            default: throw ParseError(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, start, Rational(0), {}});
        ++i;
    }
    out.push_back({Token::end, src.size(), Rational(0), {}});
    return out;
}

class Parser {
public:
    Parser(const std::string& src, int dim, ParseMode mode)
        : tokens_(tokenize(src)), dim_(dim), mode_(mode) {}

    ElementC parse() {
        ElementC x = parse_sum();
        expect(Token::end, "trailing input");
        return x;
    }

private:
    const Token& peek() const { return tokens_[cursor_]; }
    Token next() { return tokens_[cursor_++]; }
    void expect(Token::Kind kind, const char* what) {
        if (peek().kind != kind) throw ParseError(peek().pos, what);
        ++cursor_;
    }

    ElementC parse_sum() {
        ElementC acc = parse_term();
        while (peek().kind == Token::plus || peek().kind == Token::minus) {
            bool minus = next().kind == Token::minus;
            ElementC rhs = parse_term();
            acc += minus ? -rhs : rhs;
        }
        return acc;
    }

    ElementC parse_term() {
        if (peek().kind == Token::minus) {
            next();
            return -parse_term();
        }
        return parse_product();
    }

    ElementC parse_product() {
        ElementC acc = parse_wedge();
        while (peek().kind == Token::star) {
            next();
            acc = acc * parse_wedge();
        }
        return acc;
    }

    struct Atom {
        ElementC value;
        bool integer_literal;
        long exponent;  // valid when integer_literal and small
    };

    ElementC parse_wedge() {
        std::vector<Atom> chain{parse_atom()};
        while (peek().kind == Token::caret) {
            next();
            chain.push_back(parse_atom());
        }
        if (chain.size() == 1) return chain[0].value;
        // fold: scalar ^ integer-literal is a power, everything else wedges
        std::vector<ElementC> factors;
        for (auto& atom : chain) {
            if (!factors.empty() && atom.integer_literal && factors.back().degree() == 0) {
                ElementC base = factors.back();
                ElementC acc = ElementC::unit(dim_);
                for (long i = 0; i < atom.exponent; ++i) acc = acc * base;
                factors.back() = acc;
            } else {
                factors.push_back(atom.value);
            }
        }
        if (factors.size() == 1) return factors[0];
        return wedge(factors);
    }

    Atom parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::number: {
                Token tok = next();
                bool small = tok.value.is_integer() && tok.value >= Rational(0) &&
                             tok.value <= Rational(64);
                long exp = small ? std::stol(tok.value.str()) : 0;
                return {ElementC::scalar(CasimirPoly(tok.value), dim_), small, exp};
            }
            case Token::casimir:
                next();
                return {ElementC::scalar(CasimirPoly::symbol(), dim_), false, 0};
            case Token::word: {
                Token tok = next();
                ElementC acc = ElementC::unit(dim_);
                for (auto [base, idx] : tok.letters) acc = acc * letter_element(base, idx, tok.pos);
                return {acc, false, 0};
            }
            case Token::lparen: {
                next();
                ElementC inner = parse_sum();
                expect(Token::rparen, "expected ')'");
                return {inner, false, 0};
            }
            default:
                throw ParseError(t.pos, "expected a number, word, 'C' or '('");
        }
    }

    ElementC letter_element(char base, int idx, size_t pos) {
        if (mode_ == ParseMode::generators) {
            if (base != 'J') throw ParseError(pos, "only J1..J3 are valid in generator expressions");
            if (idx < 1 || idx > 3) throw ParseError(pos, "generator index out of range");
            return ElementC::basis_vector(idx, dim_);
        }
        if (base == 'e') {
            if (idx < 1 || idx > dim_) throw ParseError(pos, "basis index out of range");
            return ElementC::basis_vector(idx, dim_);
        }
        if (dim_ != 3) throw ParseError(pos, "generators J1..J3 require dimension 3");
        if (idx < 1 || idx > 3) throw ParseError(pos, "generator index out of range");
        return promote(generator_bivector(idx));
    }

    std::vector<Token> tokens_;
    size_t cursor_ = 0;
    int dim_;
    ParseMode mode_;
};

}  // namespace detail

inline ElementC parse_expression(const std::string& src, int dim,
                                 ParseMode mode = ParseMode::vectors) {
    return detail::Parser(src, dim, mode).parse();
}

// Narrowing helper: fails when the formal Casimir symbol is present.
inline ElementQ to_rational_element(const ElementC& x) {
    ElementQ r(x.dim());
    for (const auto& [w, c] : x.terms()) {
        if (!c.is_constant())
            throw std::invalid_argument("expression contains the formal symbol C where a rational is required");
        r.add_term(w, c.constant_term());
    }
    return r;
}

inline CasimirPoly parse_casimir_poly(const std::string& src) {
    ElementC x = parse_expression(src, 3, ParseMode::vectors);
    if (x.degree() != 0) throw std::invalid_argument("expected a scalar C-polynomial");
    return x.coefficient(Word{});
}

}  // namespace spinclif
