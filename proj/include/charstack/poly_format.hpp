#ifndef CHARSTACK_POLY_FORMAT_HPP
#define CHARSTACK_POLY_FORMAT_HPP

#include <string>

#include <json.hpp>

#include "charstack/error.hpp"
#include "charstack/polynomial.hpp"
#include "charstack/rational.hpp"

namespace charstack {

/// Canonical text form: descending exponents, explicit '*' and '^',
/// rationals as a/b. Accepted back by parse_polynomial.
inline std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto cs = p.coefficients();
    bool first = true;
    for (long e = p.degree(); e >= 0; --e) {
        const Rational& c = cs[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational a = negative ? Rational(-c) : c;
        if (e == 0) {
            out += to_string(a);
            continue;
        }
        if (a != 1) out += to_string(a) + "*";
        out += "q";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

/// LaTeX in the usual descending-power style, e.g. "2 q^6+q^5-4 q^4+2".
inline std::string to_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto cs = p.coefficients();
    bool first = true;
    for (long e = p.degree(); e >= 0; --e) {
        const Rational& c = cs[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) out += "-";
        else if (!first) out += "+";
        first = false;
        const Rational a = negative ? Rational(-c) : c;
        std::string coeff;
        if (is_integer(a)) coeff = numerator_of(a).str();
        else coeff = "\\frac{" + numerator_of(a).str() + "}{" + denominator_of(a).str() + "}";
        if (e == 0) {
            out += coeff;
            continue;
        }
        if (a != 1) out += coeff + " ";
        out += "q";
        if (e > 1) out += e >= 10 ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    }
    return out;
}

/// {"coeffs": [["num","den"], ...]} ascending from exponent 0.
inline nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back({numerator_of(c).str(), denominator_of(c).str()});
    return {{"coeffs", coeffs}};
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError("polynomial JSON must be an object with a 'coeffs' array", 0, "{\"coeffs\": [...]}");
    std::vector<Rational> coeffs;
    for (const auto& pair : j["coeffs"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            throw ParseError("coefficient must be a [\"num\",\"den\"] pair of strings", coeffs.size(), "[\"num\",\"den\"]");
        coeffs.push_back(make_rational(parse_integer(pair[0].get<std::string>()), parse_integer(pair[1].get<std::string>())));
    }
    return Polynomial(std::move(coeffs));
}

} // namespace charstack

#endif
