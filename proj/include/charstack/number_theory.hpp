#ifndef CHARSTACK_NUMBER_THEORY_HPP
#define CHARSTACK_NUMBER_THEORY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "charstack/rational.hpp"

// Trial-division helpers. Arguments stay small (n <= 64 in practice).
namespace charstack {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct PrimePower {
    std::uint64_t p;
    unsigned k;
};

inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{p, k};
}

inline int mobius(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

inline std::uint64_t totient(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        while (n % d == 0) n /= d;
        result -= result / d;
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer ipow(Integer base, unsigned long e) {
    Integer r = 1;
    while (e > 0) {
        if (e & 1UL) r *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return r;
}

} // namespace charstack

#endif
