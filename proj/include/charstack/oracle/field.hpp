#ifndef CHARSTACK_ORACLE_FIELD_HPP
#define CHARSTACK_ORACLE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "charstack/error.hpp"
#include "charstack/number_theory.hpp"

namespace charstack::oracle {

using Elem = std::uint8_t;

/// F_q with q = p^k <= 256. Elements are integers 0..q-1 whose base-p digits
/// are the coefficients of a polynomial in x modulo the reduction polynomial.
class FqField {
public:
    static constexpr unsigned max_order = 256;

    explicit FqField(std::uint64_t q) {
        const auto pp = as_prime_power(q);
        if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");
        if (q > max_order) throw TooLarge("field order " + std::to_string(q) + " exceeds " + std::to_string(max_order));
        p_ = static_cast<unsigned>(pp->p);
        k_ = static_cast<unsigned>(pp->k);
        q_ = static_cast<unsigned>(q);
        if (k_ == 1)
            reduction_ = {0, 1};
        else if (p_ == 2 && k_ == 2)
            reduction_ = {1, 1, 1};
        else if (p_ == 2 && k_ == 3)
            reduction_ = {1, 1, 0, 1};
        else if (p_ == 3 && k_ == 2)
            reduction_ = {1, 0, 1};
        else
            reduction_ = first_irreducible(p_, k_);
        if (!is_irreducible(reduction_, p_))
            throw AssertionFailure("reduction polynomial for F_" + std::to_string(q) + " is reducible");
        build_tables();
    }

    unsigned p() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    unsigned q() const noexcept { return q_; }
    /// Monic reduction polynomial, ascending coefficients.
    const std::vector<unsigned>& reduction_polynomial() const noexcept { return reduction_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("inverse of zero");
        return inv_[a];
    }
    /// Generator of the multiplicative group.
    Elem primitive() const noexcept { return primitive_; }
    /// x^i for i < k: a basis of F_q over F_p.
    std::vector<Elem> prime_field_basis() const {
        std::vector<Elem> out;
        unsigned v = 1;
        for (unsigned i = 0; i < k_; ++i, v *= p_) out.push_back(static_cast<Elem>(v));
        return out;
    }

    /// Exhaustive check: no monic factor of degree 1..deg/2 divides f.
    static bool is_irreducible(const std::vector<unsigned>& f, unsigned p) {
        const std::size_t deg = f.size() - 1;
        if (deg <= 1) return deg == 1;
        for (std::size_t d = 1; d <= deg / 2; ++d) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < d; ++i) count *= p;
            for (std::uint64_t code = 0; code < count; ++code) {
                std::vector<unsigned> g(d + 1);
                std::uint64_t x = code;
                for (std::size_t i = 0; i < d; ++i, x /= p) g[i] = static_cast<unsigned>(x % p);
                g[d] = 1;
                if (remainder_is_zero(f, g, p)) return false;
            }
        }
        return true;
    }

private:
    static bool remainder_is_zero(std::vector<unsigned> f, const std::vector<unsigned>& g, unsigned p) {
        const std::size_t dg = g.size() - 1;
        for (std::size_t top = f.size(); top-- > dg;) {
            const unsigned c = f[top] % p;
            if (c != 0)
                for (std::size_t i = 0; i <= dg; ++i) f[top - dg + i] = (f[top - dg + i] + p * p - c * g[i] % p) % p;
        }
        for (std::size_t i = 0; i < dg; ++i)
            if (f[i] % p != 0) return false;
        return true;
    }

    static std::vector<unsigned> first_irreducible(unsigned p, unsigned k) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < k; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<unsigned> f(k + 1);
            std::uint64_t x = code;
            for (unsigned i = 0; i < k; ++i, x /= p) f[i] = static_cast<unsigned>(x % p);
            f[k] = 1;
            if (is_irreducible(f, p)) return f;
        }
        throw AssertionFailure("no irreducible polynomial found");
    }

    std::vector<unsigned> digits(unsigned a) const {
        std::vector<unsigned> d(k_);
        for (unsigned i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
        return d;
    }

    unsigned undigits(const std::vector<unsigned>& d) const {
        unsigned v = 0;
        for (unsigned i = k_; i-- > 0;) v = v * p_ + d[i];
        return v;
    }

    void build_tables() {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a) {
            const auto da = digits(a);
            std::vector<unsigned> dn(k_);
            for (unsigned i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
            neg_[a] = static_cast<Elem>(undigits(dn));
            for (unsigned b = 0; b < q_; ++b) {
                const auto db = digits(b);
                std::vector<unsigned> s(k_);
                for (unsigned i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = static_cast<Elem>(undigits(s));
                std::vector<unsigned> prod(2 * k_ - 1, 0);
                for (unsigned i = 0; i < k_; ++i)
                    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (std::size_t top = prod.size(); top-- > k_;) {
                    const unsigned c = prod[top];
                    if (c == 0) continue;
                    for (unsigned i = 0; i <= k_; ++i) prod[top - k_ + i] = (prod[top - k_ + i] + p_ * p_ - c * reduction_[i] % p_) % p_;
                }
                prod.resize(k_);
                mul_[a * q_ + b] = static_cast<Elem>(undigits(prod));
            }
        }
        for (unsigned a = 1; a < q_; ++a)
            for (unsigned b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
        for (unsigned g = 1; g < q_; ++g) {
            unsigned order = 1;
            Elem x = static_cast<Elem>(g);
            while (x != 1) {
                x = mul_[x * q_ + g];
                ++order;
            }
            if (order == q_ - 1) {
                primitive_ = static_cast<Elem>(g);
                break;
            }
        }
    }

    unsigned p_ = 0, k_ = 0, q_ = 0;
    std::vector<unsigned> reduction_;
    std::vector<Elem> add_, mul_, neg_, inv_;
    Elem primitive_ = 1;
};

} // namespace charstack::oracle

#endif
