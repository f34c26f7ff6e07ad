#ifndef CHARSTACK_RATIONAL_HPP
#define CHARSTACK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "charstack/error.hpp"

namespace charstack {

/// Arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational; always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty integer", 0, "digits");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("sign without digits", i, "digits");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw ParseError("invalid digit in integer '" + s + "'", j, "digits");
    return Integer(s);
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace charstack

#endif
