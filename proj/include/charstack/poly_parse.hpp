#ifndef CHARSTACK_POLY_PARSE_HPP
#define CHARSTACK_POLY_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "charstack/error.hpp"
#include "charstack/polynomial.hpp"

namespace charstack {

namespace detail {

// Recursive descent over
//   expr   = ["-"] term {("+"|"-") term}
//   term   = factor {"*" factor}
//   factor = atom ["^" nat]
//   atom   = "q" | nat | nat "/" nat | "(" expr ")"
class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'", "'+', '-', '*' or end of input");
        return p;
    }

private:
    Polynomial expr() {
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const Integer e = natural("exponent");
            if (e > 100000) fail("exponent too large", "natural number <= 100000");
            base = pow(base, e.convert_to<unsigned long>());
        }
        return base;
    }

    Polynomial atom() {
        const char c = peek();
        if (c == 'q') {
            ++pos_;
            return Polynomial::variable();
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')') fail("unbalanced parenthesis", "')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Integer num = natural("number");
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t at = pos_;
                const Integer den = natural("denominator");
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator", "nonzero natural number");
                }
                return Polynomial::constant(Rational(num, den));
            }
            return Polynomial::constant(Rational(num));
        }
        fail(c == '\0' ? std::string("unexpected end of input") : "unexpected character '" + std::string(1, c) + "'",
             "'q', number or '('");
    }

    Integer natural(const char* what) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("missing ") + what, "natural number");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message, const std::string& expected) const {
        throw ParseError(message, pos_, expected);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a polynomial expression in q, e.g. "1/2*q*(q^2+1)".
/// Multiplication is explicit; whitespace is ignored.
inline Polynomial parse_polynomial(std::string_view text) { return detail::PolynomialParser(text).parse(); }

} // namespace charstack

#endif
