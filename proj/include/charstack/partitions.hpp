#ifndef CHARSTACK_PARTITIONS_HPP
#define CHARSTACK_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "charstack/error.hpp"
#include "charstack/half_laurent.hpp"

namespace charstack {

/// Integer partition with weakly decreasing positive parts. The empty
/// partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw DomainError("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    int size() const noexcept {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Canonical order: partitions of larger size first, then decreasing
    /// lexicographic, so enumerate_partitions(n) comes out sorted.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (auto c = b.size() <=> a.size(); c != 0) return c;
        return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
    }

private:
    std::vector<int> parts_;
};

/// All partitions of n in decreasing lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw DomainError("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Transpose of the Young diagram.
inline Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    if (lambda.empty()) return {};
    out.reserve(static_cast<std::size_t>(lambda[0]));
    for (int j = 1; j <= lambda[0]; ++j) {
        int column = 0;
        for (int part : lambda.parts())
            if (part >= j) ++column;
        out.push_back(column);
    }
    return Partition(std::move(out));
}

/// Hook length of every box, row by row.
inline std::vector<int> hook_lengths(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            out.push_back(lambda[i] - j + conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1);
    return out;
}

/// <lambda, lambda> = sum of squared conjugate parts.
inline long self_pairing(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    long s = 0;
    for (int c : conj.parts()) s += static_cast<long>(c) * c;
    return s;
}

/// Normalised hook polynomial q^(-<lambda,lambda>/2) * prod over boxes (1 - q^h).
inline HalfLaurent hook_polynomial(const Partition& lambda) {
    HalfLaurent h = HalfLaurent::term(1, -self_pairing(lambda));
    for (int hook : hook_lengths(lambda)) h *= HalfLaurent::term(1, 0) - HalfLaurent::term(1, 2L * hook);
    return h;
}

inline HalfLaurent substitute_power(const HalfLaurent& h, long d) {
    if (d < 1) throw DomainError("substitute_power needs d >= 1");
    return h.substitute_power(d);
}

/// "[3,1]"; "[]" for the empty partition.
inline std::string to_string(const Partition& lambda) {
    std::string out = "[";
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(lambda[i]);
    }
    return out + "]";
}

inline Partition parse_partition(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip();
    if (pos >= text.size() || text[pos] != '[') throw ParseError("partition must start with '['", pos, "'['");
    ++pos;
    std::vector<int> parts;
    skip();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        for (;;) {
            skip();
            const std::size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
            if (start == pos) throw ParseError("missing partition part", pos, "positive integer");
            parts.push_back(std::stoi(std::string(text.substr(start, pos - start))));
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                break;
            }
            throw ParseError("malformed partition", pos, "',' or ']'");
        }
    }
    skip();
    if (pos != text.size()) throw ParseError("trailing characters after partition", pos, "end of input");
    try {
        return Partition(std::move(parts));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0, "weakly decreasing positive parts");
    }
}

} // namespace charstack

#endif
