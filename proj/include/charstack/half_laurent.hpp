#ifndef CHARSTACK_HALF_LAURENT_HPP
#define CHARSTACK_HALF_LAURENT_HPP

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "charstack/error.hpp"
#include "charstack/polynomial.hpp"
#include "charstack/rational.hpp"

namespace charstack {

/// Sparse Laurent polynomial whose exponents are half-integers.
///
/// A term is keyed by the exponent numerator e, standing for q^(e/2).
/// Zero coefficients are never stored.
class HalfLaurent {
public:
    using Terms = std::map<long, Rational>;

    HalfLaurent() = default;

    static HalfLaurent constant(const Rational& c) { return term(c, 0); }

    /// c * q^(half_exponent / 2)
    static HalfLaurent term(const Rational& c, long half_exponent) {
        HalfLaurent h;
        if (c != 0) h.terms_.emplace(half_exponent, c);
        return h;
    }

    static HalfLaurent from_polynomial(const Polynomial& p) {
        HalfLaurent h;
        const auto cs = p.coefficients();
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (cs[i] != 0) h.terms_.emplace(2 * static_cast<long>(i), cs[i]);
        return h;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    HalfLaurent& operator+=(const HalfLaurent& o) {
        for (const auto& [e, c] : o.terms_) accumulate(e, c);
        return *this;
    }

    HalfLaurent& operator-=(const HalfLaurent& o) {
        for (const auto& [e, c] : o.terms_) accumulate(e, -c);
        return *this;
    }

    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }

    friend HalfLaurent operator-(HalfLaurent a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }

    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
        HalfLaurent out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.accumulate(ea + eb, ca * cb);
        return out;
    }

    HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }

    friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

    /// q -> q^d, i.e. every exponent numerator scales by d.
    HalfLaurent substitute_power(long d) const {
        HalfLaurent out;
        for (const auto& [e, c] : terms_) out.accumulate(e * d, c);
        return out;
    }

    double eval_real(double q) const {
        double acc = 0.0;
        for (const auto& [e, c] : terms_) acc += to_double(c) * std::pow(q, static_cast<double>(e) / 2.0);
        return acc;
    }

    /// Converts to an ordinary polynomial; every exponent must be a nonnegative integer.
    Polynomial to_polynomial() const {
        if (terms_.empty()) return {};
        std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(0L, terms_.rbegin()->first / 2)) + 1);
        for (const auto& [e, c] : terms_) {
            if (e < 0 || e % 2 != 0)
                throw NotAPolynomial("term with exponent " + std::to_string(e) + "/2 is not a polynomial term");
            coeffs[static_cast<std::size_t>(e / 2)] = c;
        }
        return Polynomial(std::move(coeffs));
    }

private:
    void accumulate(long e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

inline HalfLaurent pow(HalfLaurent base, unsigned long k) {
    HalfLaurent result = HalfLaurent::constant(1);
    while (k > 0) {
        if (k & 1UL) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

} // namespace charstack

#endif
