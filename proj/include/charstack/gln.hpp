#ifndef CHARSTACK_GLN_HPP
#define CHARSTACK_GLN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "charstack/error.hpp"
#include "charstack/half_laurent.hpp"
#include "charstack/number_theory.hpp"
#include "charstack/partitions.hpp"
#include "charstack/polynomial.hpp"

namespace charstack::gln {

/// One entry m_{d,lambda} of a type: `multiplicity` irreducible
/// polynomials of degree `degree` carry the partition `partition`.
struct TypeEntry {
    int degree;
    Partition partition;
    int multiplicity;

    friend bool operator==(const TypeEntry&, const TypeEntry&) = default;
};

namespace detail {
inline bool block_less(int da, const Partition& la, int db, const Partition& lb) {
    if (da != db) return da < db;
    return la < lb;
}
} // namespace detail

/// A type of GL_n: a multiset of (degree, partition) blocks.
///
/// Entries are kept sorted by (degree, partition) with distinct keys, so
/// equal types compare equal.
class GLnType {
public:
    GLnType() = default;

    explicit GLnType(std::vector<TypeEntry> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(), [](const TypeEntry& a, const TypeEntry& b) {
            return detail::block_less(a.degree, a.partition, b.degree, b.partition);
        });
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            if (e.degree < 1 || e.multiplicity < 1 || e.partition.empty())
                throw DomainError("type entries need degree >= 1, multiplicity >= 1 and a nonempty partition");
            if (i > 0 && entries_[i - 1].degree == e.degree && entries_[i - 1].partition == e.partition)
                throw DomainError("type has two entries with the same (degree, partition)");
        }
    }

    const std::vector<TypeEntry>& entries() const noexcept { return entries_; }

    /// |tau| = sum of d * |lambda| * m.
    int weight() const noexcept {
        int w = 0;
        for (const auto& e : entries_) w += e.degree * e.partition.size() * e.multiplicity;
        return w;
    }

    /// Total number of boxes, sum of |lambda| * m.
    int boxes() const noexcept {
        int b = 0;
        for (const auto& e : entries_) b += e.partition.size() * e.multiplicity;
        return b;
    }

    friend bool operator==(const GLnType&, const GLnType&) = default;

private:
    std::vector<TypeEntry> entries_;
};

/// "d:lambda^m + d:lambda^m", e.g. "1:[1]^2".
inline std::string to_string(const GLnType& tau) {
    std::string out;
    for (const auto& e : tau.entries()) {
        if (!out.empty()) out += " + ";
        out += std::to_string(e.degree) + ":" + charstack::to_string(e.partition) + "^" + std::to_string(e.multiplicity);
    }
    return out;
}

inline GLnType parse_type(std::string_view text) {
    std::vector<TypeEntry> entries;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t plus = text.find('+', start);
        if (plus == std::string_view::npos) plus = text.size();
        std::string_view piece = text.substr(start, plus - start);
        const auto colon = piece.find(':');
        const auto caret = piece.rfind('^');
        if (colon == std::string_view::npos || caret == std::string_view::npos || caret < colon)
            throw ParseError("type entry must look like d:[parts]^m", start, "d:[parts]^m");
        try {
            const int d = std::stoi(std::string(piece.substr(0, colon)));
            const int m = std::stoi(std::string(piece.substr(caret + 1)));
            entries.push_back({d, parse_partition(piece.substr(colon + 1, caret - colon - 1)), m});
        } catch (const std::logic_error&) {
            throw ParseError("malformed type entry", start, "d:[parts]^m");
        }
        start = plus + 1;
    }
    try {
        return GLnType(std::move(entries));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0, "valid type");
    }
}

/// Every type of weight n, each once, in canonical order.
inline std::vector<GLnType> enumerate_types(int n) {
    if (n < 1) throw DomainError("enumerate_types needs n >= 1");
    struct Block {
        int degree;
        Partition partition;
        int weight;
    };
    std::vector<Block> blocks;
    for (int d = 1; d <= n; ++d)
        for (int s = 1; s * d <= n; ++s)
            for (auto& lambda : enumerate_partitions(s)) blocks.push_back({d, lambda, d * s});
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return detail::block_less(a.degree, a.partition, b.degree, b.partition); });

    std::vector<GLnType> out;
    std::vector<TypeEntry> current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t first, int remaining) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t i = first; i < blocks.size(); ++i) {
            const Block& b = blocks[i];
            for (int m = 1; m * b.weight <= remaining; ++m) {
                current.push_back({b.degree, b.partition, m});
                rec(i + 1, remaining - m * b.weight);
                current.pop_back();
            }
        }
    };
    rec(0, n);
    return out;
}

/// I_d: monic irreducible polynomials of degree d over F_q, excluding t itself.
inline Polynomial irreducible_count(int d) {
    if (d < 1) throw DomainError("irreducible_count needs d >= 1");
    if (d == 1) return Polynomial{-1, 1};
    Polynomial sum;
    for (auto k : divisors(static_cast<std::uint64_t>(d))) {
        const int mu = mobius(k);
        if (mu != 0) sum += Polynomial::monomial(mu, static_cast<std::size_t>(d) / k);
    }
    return sum * Rational(1, d);
}

/// A_tau: number of conjugacy classes (equivalently irreducible characters) of type tau.
inline Polynomial genus_number(const GLnType& tau) {
    std::map<int, std::vector<int>> by_degree;
    for (const auto& e : tau.entries()) by_degree[e.degree].push_back(e.multiplicity);
    Polynomial result = Polynomial::constant(1);
    for (const auto& [d, mults] : by_degree) {
        const Polynomial count = irreducible_count(d);
        int total = 0;
        Integer denom = 1;
        for (int m : mults) {
            total += m;
            denom *= factorial(static_cast<unsigned>(m));
        }
        for (int i = 0; i < total; ++i) result *= count - Polynomial::constant(i);
        result *= Rational(1, denom);
    }
    return result;
}

/// (-1)^n q^(n^2/2) prod H_lambda(q^d)^m, as a half-exponent Laurent polynomial.
inline HalfLaurent type_hook_laurent(const GLnType& tau) {
    const long n = tau.weight();
    HalfLaurent h = HalfLaurent::term(n % 2 == 0 ? 1 : -1, n * n);
    for (const auto& e : tau.entries())
        h *= pow(hook_polynomial(e.partition).substitute_power(e.degree), static_cast<unsigned long>(e.multiplicity));
    return h;
}

/// H_tau. Throws NotAPolynomial if the assembly does not cancel the half powers.
inline Polynomial type_hook_polynomial(const GLnType& tau) { return type_hook_laurent(tau).to_polynomial(); }

/// |G(F_q)| / chi(1) for the characters of type conjugate to tau: H_tau with
/// its sign fixed so the leading coefficient is +1. The two agree up to
/// (-1)^(n + boxes), which is invisible in even powers.
inline Polynomial type_codegree(const GLnType& tau) {
    Polynomial h = type_hook_polynomial(tau);
    return (tau.weight() + tau.boxes()) % 2 == 0 ? h : -h;
}

namespace detail {
inline void require_genus(long g) {
    if (g < 1) throw DomainError("genus must be >= 1");
}
} // namespace detail

/// Sum over types of A_tau * H_tau^(2g-2). Types are independent; with
/// threads > 1 they are split across worker tasks and summed afterwards.
inline Polynomial count_polynomial_gln(int n, long g, unsigned threads = 1) {
    if (n < 1) throw DomainError("n must be >= 1");
    detail::require_genus(g);
    const auto types = enumerate_types(n);
    const auto exponent = static_cast<unsigned long>(2 * g - 2);
    auto partial = [&](std::size_t begin, std::size_t step) {
        Polynomial acc;
        for (std::size_t i = begin; i < types.size(); i += step)
            acc += genus_number(types[i]) * pow(type_hook_polynomial(types[i]), exponent);
        return acc;
    };
    if (threads <= 1 || types.size() < 2) return partial(0, 1);
    const std::size_t workers = std::min<std::size_t>(threads, types.size());
    std::vector<std::future<Polynomial>> futures;
    for (std::size_t w = 0; w < workers; ++w) futures.push_back(std::async(std::launch::async, partial, w, workers));
    Polynomial total;
    for (auto& f : futures) total += f.get();
    return total;
}

/// Counting polynomial of the identity component of the PGL_n character stack.
inline Polynomial count_polynomial_pgln_identity(int n, long g, unsigned threads = 1) {
    const Polynomial total = count_polynomial_gln(n, g, threads);
    try {
        return div_exact(total, pow(Polynomial{-1, 1}, static_cast<unsigned long>(2 * g - 1)));
    } catch (const NonExactDivision&) {
        throw NonExactDivision("GL_n count is not divisible by (q-1)^(2g-1); internal error");
    }
}

/// Value at q = 1 of the PGL_n identity-component polynomial, checked
/// against phi(n) * n^(2g-3).
inline Integer euler_characteristic_pgln_identity(int n, long g) {
    if (g < 2) throw DomainError("Euler characteristic identity needs g >= 2");
    const Rational value = count_polynomial_pgln_identity(n, g).eval(1);
    const Integer expected = Integer(totient(static_cast<std::uint64_t>(n))) * ipow(Integer(n), static_cast<unsigned long>(2 * g - 3));
    if (value != Rational(expected))
        throw AssertionFailure("Euler characteristic " + charstack::to_string(value) + " differs from phi(n)*n^(2g-3) = " + expected.str());
    return expected;
}

/// |GL_n(F_q)| = q^(n(n-1)/2) prod_{k=1..n} (q^k - 1).
inline Polynomial gln_order_polynomial(int n) {
    if (n < 1) throw DomainError("n must be >= 1");
    Polynomial p = Polynomial::monomial(1, static_cast<std::size_t>(n * (n - 1) / 2));
    for (int k = 1; k <= n; ++k) p *= Polynomial::monomial(1, static_cast<std::size_t>(k)) - Polynomial::constant(1);
    return p;
}

/// Unipotent degree from the closed product formula over the parts in
/// increasing order, alpha_i = lambda_i + (i - 1).
inline Polynomial unipotent_degree_gln_product_formula(const Partition& lambda) {
    const int n = lambda.size();
    if (n < 1) throw DomainError("unipotent degree needs a nonempty partition");
    std::vector<int> increasing(lambda.parts().rbegin(), lambda.parts().rend());
    const std::size_t m = increasing.size();
    std::vector<int> alpha(m);
    for (std::size_t i = 0; i < m; ++i) alpha[i] = increasing[i] + static_cast<int>(i);
    auto q_to = [](int e) { return Polynomial::monomial(1, static_cast<std::size_t>(e)); };
    auto q_to_minus_one = [&](int e) { return q_to(e) - Polynomial::constant(1); };

    Polynomial numer = Polynomial::constant(1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) numer *= q_to(alpha[j]) - q_to(alpha[i]);
    for (int k = 1; k <= n; ++k) numer *= q_to_minus_one(k);

    long shift = 0;
    for (long r = static_cast<long>(m) - 1; r >= 2; --r) shift += r * (r - 1) / 2;
    Polynomial denom = q_to(static_cast<int>(shift));
    for (std::size_t i = 0; i < m; ++i)
        for (int k = 1; k <= alpha[i]; ++k) denom *= q_to_minus_one(k);
    return div_exact(numer, denom);
}

/// Degree of the unipotent character of GL_n(F_q) labelled by lambda
/// (lambda = (n) is the trivial character). Computed as |G| divided by the
/// codegree of the type {(1, lambda, 1)}, then checked against the product formula.
inline Polynomial unipotent_degree_gln(const Partition& lambda) {
    const int n = lambda.size();
    if (n < 1) throw DomainError("unipotent degree needs a nonempty partition");
    const Polynomial via_green = div_exact(gln_order_polynomial(n), type_codegree(GLnType({{1, lambda, 1}})));
    const Polynomial via_formula = unipotent_degree_gln_product_formula(lambda);
    if (via_green != via_formula)
        throw AssertionFailure("unipotent degree routes disagree for " + charstack::to_string(lambda));
    return via_green;
}

/// Representation zeta function sum over chi of chi(1)^(-s) for GL_n(F_q),
/// as sum_tau A_tau(q) * (H_tau(q) / |G|)^s.
inline double zeta_gln(int n, std::uint64_t q, double s) {
    if (!as_prime_power(q)) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    const Rational qq(q);
    const Rational order = gln_order_polynomial(n).eval(qq);
    double total = 0.0;
    for (const auto& tau : enumerate_types(n)) {
        const Rational codegree = type_codegree(tau).eval(qq);
        if (codegree <= 0) throw DomainError("nonpositive codegree at q = " + std::to_string(q));
        const Rational count = genus_number(tau).eval(qq);
        if (count == 0) continue;
        total += to_double(count) * std::pow(to_double(codegree / order), s);
    }
    return total;
}

} // namespace charstack::gln

#endif
