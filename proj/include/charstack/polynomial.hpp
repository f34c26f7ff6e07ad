#ifndef CHARSTACK_POLYNOMIAL_HPP
#define CHARSTACK_POLYNOMIAL_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "charstack/error.hpp"
#include "charstack/rational.hpp"

namespace charstack {

/// Dense univariate polynomial in q over the rationals.
///
/// Coefficients are stored by ascending exponent. The highest stored
/// coefficient is never zero; the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

    /// c * q^e
    static Polynomial monomial(const Rational& c, std::size_t e) {
        std::vector<Rational> v(e + 1);
        v[e] = c;
        return Polynomial(std::move(v));
    }

    static Polynomial variable() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    Rational coefficient(std::size_t e) const { return e < coeffs_.size() ? coeffs_[e] : Rational(0); }

    Rational leading_coefficient() const {
        if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    bool has_integer_coefficients() const {
        for (const auto& c : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Horner evaluation.
    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double eval_real(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
        return Polynomial(std::move(out));
    }

    /// p(q^d).
    Polynomial substitute_power(std::size_t d) const {
        if (d == 0) return constant(eval(1));
        if (is_zero()) return {};
        std::vector<Rational> out((coeffs_.size() - 1) * d + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * d] = coeffs_[i];
        return Polynomial(std::move(out));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Repeated squaring; pow(p, 0) is 1 for every p, including zero.
inline Polynomial pow(Polynomial base, unsigned long k) {
    Polynomial result = Polynomial::constant(1);
    while (k > 0) {
        if (k & 1UL) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

inline DivisionResult divmod(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Rational> rem(p.coefficients().begin(), p.coefficients().end());
    const long dd = d.degree();
    const Rational lead = d.leading_coefficient();
    if (p.degree() < dd) return {Polynomial{}, p};
    std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - dd + 1));
    for (long i = p.degree(); i >= dd; --i) {
        const Rational c = rem[static_cast<std::size_t>(i)] / lead;
        quo[static_cast<std::size_t>(i - dd)] = c;
        if (c == 0) continue;
        for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= c * d.coefficient(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

/// Quotient p / d; throws NonExactDivision when the remainder is nonzero.
inline Polynomial div_exact(const Polynomial& p, const Polynomial& d) {
    auto [quotient, remainder] = divmod(p, d);
    if (!remainder.is_zero()) throw NonExactDivision("polynomial division leaves a nonzero remainder");
    return quotient;
}

/// True when d divides p exactly.
inline bool divides(const Polynomial& d, const Polynomial& p) { return divmod(p, d).remainder.is_zero(); }

} // namespace charstack

#endif
