#ifndef CHARSTACK_ORACLE_GROUP_HPP
#define CHARSTACK_ORACLE_GROUP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "charstack/error.hpp"
#include "charstack/oracle/field.hpp"
#include "charstack/rational.hpp"

namespace charstack::oracle {

enum class GroupKind { GL, SL, PGL };

inline std::string to_string(GroupKind k) {
    switch (k) {
        case GroupKind::GL: return "gl";
        case GroupKind::SL: return "sl";
        case GroupKind::PGL: return "pgl";
    }
    return "?";
}

inline GroupKind parse_group_kind(const std::string& s) {
    if (s == "gl" || s == "GL") return GroupKind::GL;
    if (s == "sl" || s == "SL") return GroupKind::SL;
    if (s == "pgl" || s == "PGL") return GroupKind::PGL;
    throw DomainError("unknown group kind '" + s + "' (expected gl, sl or pgl)");
}

/// |G(F_q)| for G = GL_n, SL_n or PGL_n.
inline Integer group_order(GroupKind kind, int n, std::uint64_t q) {
    Integer order = 1;
    const Integer qn = ipow(Integer(q), static_cast<unsigned long>(n));
    for (int i = 0; i < n; ++i) order *= qn - ipow(Integer(q), static_cast<unsigned long>(i));
    if (kind != GroupKind::GL) order /= Integer(q - 1);
    return order;
}

inline constexpr std::uint64_t default_group_cap = 100000;

/// Every element of GL_n, SL_n or PGL_n over F_q, indexed, with the identity
/// at index 0. PGL elements are scalar-normalized: the first nonzero entry in
/// a column-major scan is 1.
class GroupTable {
public:
    using Index = std::uint32_t;
    static constexpr int max_n = 6;

    GroupTable(GroupKind kind, int n, std::uint64_t q, std::uint64_t cap = default_group_cap) : kind_(kind), n_(n), field_(q) {
        if (n < 1) throw DomainError("matrix size must be positive");
        if (n > max_n) throw TooLarge("matrix size above " + std::to_string(max_n));
        const Integer order = group_order(kind, n, q);
        if (order > cap)
            throw CapExceeded(to_string(kind) + std::to_string(n) + "(F_" + std::to_string(q) + ") has order " +
                              charstack::to_string(Rational(order)) + ", above the cap " + std::to_string(cap));
        const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        std::uint64_t space = 1;
        for (std::size_t i = 0; i < cells; ++i) {
            if (space > (std::uint64_t{1} << 40) / q) throw TooLarge("matrix space too large to scan");
            space *= q;
        }
        std::vector<Elem> m(cells);
        for (std::uint64_t code = 0; code < space; ++code) {
            decode(code, m.data());
            if (kind_ == GroupKind::PGL && !is_normalized(m.data())) continue;
            const Elem det = determinant(m.data());
            if (det == 0 || (kind_ == GroupKind::SL && det != 1)) continue;
            codes_.push_back(code);
        }
        if (Integer(codes_.size()) != order)
            throw AssertionFailure("enumerated " + std::to_string(codes_.size()) + " elements, expected " + charstack::to_string(Rational(order)));
        const std::uint64_t id = encode(identity_matrix().data());
        for (std::size_t i = 0; i < codes_.size(); ++i)
            if (codes_[i] == id) std::swap(codes_[0], codes_[i]);
        entries_.resize(codes_.size() * cells);
        index_.reserve(codes_.size() * 2);
        for (std::size_t i = 0; i < codes_.size(); ++i) {
            decode(codes_[i], &entries_[i * cells]);
            index_.emplace(codes_[i], static_cast<Index>(i));
        }
        inverse_.resize(codes_.size());
        for (std::size_t i = 0; i < codes_.size(); ++i) inverse_[i] = index_of(invert(element(static_cast<Index>(i))));
    }

    GroupKind kind() const noexcept { return kind_; }
    int n() const noexcept { return n_; }
    std::uint64_t q() const noexcept { return field_.q(); }
    const FqField& field() const noexcept { return field_; }
    std::size_t order() const noexcept { return codes_.size(); }
    std::uint64_t code(Index i) const { return codes_[i]; }

    /// Row-major entries of element i.
    const Elem* element(Index i) const { return &entries_[static_cast<std::size_t>(i) * cells()]; }

    Index mul(Index a, Index b) const {
        std::array<Elem, max_n * max_n> c;
        multiply(element(a), element(b), c.data());
        return lookup(c.data());
    }
    Index inverse(Index a) const { return inverse_[a]; }

    /// Index of a matrix, normalizing it first for PGL. Throws if it is not in the group.
    Index index_of(std::vector<Elem> m) const {
        if (m.size() != cells()) throw DomainError("matrix has the wrong size");
        return lookup(m.data());
    }

    std::optional<Index> find_code(std::uint64_t code) const {
        const auto it = index_.find(code);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Transvections 1 + a E_ij over an F_p-basis of F_q, plus diag(gamma, 1, ...)
    /// with gamma primitive unless the group is SL.
    std::vector<Index> generators() const {
        std::vector<Index> gens;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (i == j) continue;
                for (Elem a : field_.prime_field_basis()) {
                    auto m = identity_matrix();
                    m[static_cast<std::size_t>(i * n_ + j)] = a;
                    gens.push_back(index_of(m));
                }
            }
        if (kind_ != GroupKind::SL && field_.q() > 2) {
            auto m = identity_matrix();
            m[0] = field_.primitive();
            gens.push_back(index_of(m));
        }
        if (gens.empty()) gens.push_back(0);
        return gens;
    }

private:
    Index lookup(Elem* m) const {
        if (kind_ == GroupKind::PGL) normalize(m);
        const auto it = index_.find(encode(m));
        if (it == index_.end()) throw DomainError("matrix is not an element of the group");
        return it->second;
    }

    std::size_t cells() const noexcept { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_); }

    std::vector<Elem> identity_matrix() const {
        std::vector<Elem> m(cells(), 0);
        for (int i = 0; i < n_; ++i) m[static_cast<std::size_t>(i * n_ + i)] = 1;
        return m;
    }

    std::uint64_t encode(const Elem* m) const {
        std::uint64_t code = 0;
        for (std::size_t i = cells(); i-- > 0;) code = code * field_.q() + m[i];
        return code;
    }

    void decode(std::uint64_t code, Elem* m) const {
        for (std::size_t i = 0; i < cells(); ++i) {
            m[i] = static_cast<Elem>(code % field_.q());
            code /= field_.q();
        }
    }

    const Elem* first_in_column_scan(const Elem* m) const {
        for (int c = 0; c < n_; ++c)
            for (int r = 0; r < n_; ++r)
                if (m[r * n_ + c] != 0) return &m[r * n_ + c];
        return nullptr;
    }

    bool is_normalized(const Elem* m) const {
        const Elem* lead = first_in_column_scan(m);
        return lead && *lead == 1;
    }

    void normalize(Elem* m) const {
        const Elem* lead = first_in_column_scan(m);
        if (!lead) return;
        const Elem s = field_.inv(*lead);
        for (std::size_t i = 0; i < cells(); ++i) m[i] = field_.mul(m[i], s);
    }

    void multiply(const Elem* a, const Elem* b, Elem* c) const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                Elem s = 0;
                for (int k = 0; k < n_; ++k) s = field_.add(s, field_.mul(a[i * n_ + k], b[k * n_ + j]));
                c[i * n_ + j] = s;
            }
    }

    Elem determinant(const Elem* src) const {
        std::vector<Elem> a(src, src + cells());
        Elem det = 1;
        for (int c = 0; c < n_; ++c) {
            int p = c;
            while (p < n_ && a[static_cast<std::size_t>(p * n_ + c)] == 0) ++p;
            if (p == n_) return 0;
            if (p != c) {
                for (int k = 0; k < n_; ++k) std::swap(a[static_cast<std::size_t>(p * n_ + k)], a[static_cast<std::size_t>(c * n_ + k)]);
                det = field_.neg(det);
            }
            const Elem pivot = a[static_cast<std::size_t>(c * n_ + c)];
            det = field_.mul(det, pivot);
            const Elem pinv = field_.inv(pivot);
            for (int r = c + 1; r < n_; ++r) {
                const Elem f = field_.mul(a[static_cast<std::size_t>(r * n_ + c)], pinv);
                if (f == 0) continue;
                for (int k = c; k < n_; ++k)
                    a[static_cast<std::size_t>(r * n_ + k)] =
                        field_.sub(a[static_cast<std::size_t>(r * n_ + k)], field_.mul(f, a[static_cast<std::size_t>(c * n_ + k)]));
            }
        }
        return det;
    }

    std::vector<Elem> invert(const Elem* src) const {
        const std::size_t w = static_cast<std::size_t>(2 * n_);
        std::vector<Elem> a(static_cast<std::size_t>(n_) * w, 0);
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) a[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j)] = src[i * n_ + j];
            a[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(n_ + i)] = 1;
        }
        for (std::size_t c = 0; c < static_cast<std::size_t>(n_); ++c) {
            std::size_t p = c;
            while (a[p * w + c] == 0) ++p;
            for (std::size_t k = 0; k < w; ++k) std::swap(a[p * w + k], a[c * w + k]);
            const Elem pinv = field_.inv(a[c * w + c]);
            for (std::size_t k = 0; k < w; ++k) a[c * w + k] = field_.mul(a[c * w + k], pinv);
            for (std::size_t r = 0; r < static_cast<std::size_t>(n_); ++r) {
                if (r == c || a[r * w + c] == 0) continue;
                const Elem f = a[r * w + c];
                for (std::size_t k = 0; k < w; ++k) a[r * w + k] = field_.sub(a[r * w + k], field_.mul(f, a[c * w + k]));
            }
        }
        std::vector<Elem> out(cells());
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i * n_ + j)] = a[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(n_ + j)];
        return out;
    }

    GroupKind kind_;
    int n_;
    FqField field_;
    std::vector<std::uint64_t> codes_;
    std::vector<Elem> entries_;
    std::unordered_map<std::uint64_t, Index> index_;
    std::vector<Index> inverse_;
};

} // namespace charstack::oracle

#endif
