#ifndef CHARSTACK_ROOTDATA_HPP
#define CHARSTACK_ROOTDATA_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "charstack/error.hpp"
#include "charstack/polynomial.hpp"
#include "charstack/rational.hpp"

namespace charstack::rootdata {

using Root = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;

/// Roots of a reductive group written in a fixed basis of its character
/// lattice X. Coroots are not stored; nothing here needs them.
class RootDatum {
public:
    RootDatum(int rank, std::vector<Root> roots, std::string label = {})
        : rank_(rank), roots_(std::move(roots)), label_(std::move(label)) {
        if (rank_ < 1) throw ValidationError(label_, "rank", "rank must be positive");
        std::set<Root> seen;
        for (const auto& r : roots_) {
            if (static_cast<int>(r.size()) != rank_)
                throw ValidationError(label_, "root-length", "root has " + std::to_string(r.size()) + " coordinates, rank is " + std::to_string(rank_));
            if (std::all_of(r.begin(), r.end(), [](long x) { return x == 0; }))
                throw ValidationError(label_, "nonzero", "zero vector listed as a root");
            if (!seen.insert(r).second) throw ValidationError(label_, "duplicate", "root listed twice");
        }
        for (const auto& r : roots_)
            if (!seen.count(negate(r))) throw ValidationError(label_, "negation", "roots are not closed under negation");
    }

    int rank() const noexcept { return rank_; }
    const std::vector<Root>& roots() const noexcept { return roots_; }
    const std::string& label() const noexcept { return label_; }

    static Root negate(Root r) {
        for (auto& x : r) x = -x;
        return r;
    }

private:
    int rank_;
    std::vector<Root> roots_;
    std::string label_;
};

/// A Weyl group element (or any twist) acting on X by an integer matrix.
class WeylElement {
public:
    explicit WeylElement(IntMatrix matrix) : matrix_(std::move(matrix)) {
        const std::size_t n = matrix_.size();
        for (const auto& row : matrix_)
            if (row.size() != n) throw DomainError("Weyl element matrix must be square");
        const Integer det = determinant();
        if (det != 1 && det != -1) throw DomainError("Weyl element matrix must have determinant +-1");
    }

    static WeylElement identity(std::size_t n) {
        IntMatrix m(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
        return WeylElement(std::move(m));
    }

    const IntMatrix& matrix() const noexcept { return matrix_; }
    std::size_t size() const noexcept { return matrix_.size(); }

    Integer determinant() const {
        // Laplace expansion; ranks here are tiny.
        return det_rec(matrix_);
    }

private:
    static Integer det_rec(const IntMatrix& m) {
        const std::size_t n = m.size();
        if (n == 0) return 1;
        if (n == 1) return m[0][0];
        Integer total = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (m[0][j] == 0) continue;
            IntMatrix minor;
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<long> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j) row.push_back(m[i][k]);
                minor.push_back(std::move(row));
            }
            const Integer term = Integer(m[0][j]) * det_rec(minor);
            total += (j % 2 == 0) ? term : Integer(-term);
        }
        return total;
    }

    IntMatrix matrix_;
};

/// Data fixing the order polynomial of a split group:
/// t^N (t-1)^c prod (t^d_i - 1).
struct SplitGroupShape {
    long positive_root_count = 0;
    std::vector<int> invariant_degrees;
    int central_torus_rank = 0;

    int semisimple_rank() const noexcept { return static_cast<int>(invariant_degrees.size()); }
};

/// Shape of a simple root system given by its Cartan type ("A2", "B2", "~A1", ...).
/// A leading '~' marks the short-root copy and does not change the shape.
inline SplitGroupShape simple_shape(std::string_view type) {
    if (!type.empty() && type.front() == '~') type.remove_prefix(1);
    if (type.size() < 2) throw DomainError("unknown Cartan type '" + std::string(type) + "'");
    const char family = type.front();
    int n = 0;
    try {
        n = std::stoi(std::string(type.substr(1)));
    } catch (const std::logic_error&) {
        throw DomainError("unknown Cartan type '" + std::string(type) + "'");
    }
    SplitGroupShape s;
    switch (family) {
        case 'A':
            if (n < 1) break;
            s.positive_root_count = static_cast<long>(n) * (n + 1) / 2;
            for (int d = 2; d <= n + 1; ++d) s.invariant_degrees.push_back(d);
            return s;
        case 'B':
        case 'C':
            if (n < 2) break;
            s.positive_root_count = static_cast<long>(n) * n;
            for (int k = 1; k <= n; ++k) s.invariant_degrees.push_back(2 * k);
            return s;
        case 'D':
            if (n < 4) break;
            s.positive_root_count = static_cast<long>(n) * (n - 1);
            for (int k = 1; k < n; ++k) s.invariant_degrees.push_back(2 * k);
            s.invariant_degrees.push_back(n);
            std::sort(s.invariant_degrees.begin(), s.invariant_degrees.end());
            return s;
        case 'G':
            if (n != 2) break;
            s.positive_root_count = 6;
            s.invariant_degrees = {2, 6};
            return s;
        default:
            break;
    }
    throw DomainError("unknown Cartan type '" + std::string(type) + "'");
}

/// |G(F_q)| for a split group: t^N (t-1)^c prod_i (t^d_i - 1).
inline Polynomial order_polynomial_split(const SplitGroupShape& shape) {
    Polynomial p = Polynomial::monomial(1, static_cast<std::size_t>(shape.positive_root_count));
    p *= pow(Polynomial{-1, 1}, static_cast<unsigned long>(shape.central_torus_rank));
    for (int d : shape.invariant_degrees) p *= Polynomial::monomial(1, static_cast<std::size_t>(d)) - Polynomial::constant(1);
    return p;
}

/// det(t * id - w), the order polynomial of the maximal torus twisted by w.
inline Polynomial torus_order_polynomial(const WeylElement& w) {
    const std::size_t n = w.size();
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = (i == j ? Polynomial::variable() : Polynomial{}) - Polynomial::constant(w.matrix()[i][j]);
    auto det = [](auto&& self, const std::vector<std::vector<Polynomial>>& a) -> Polynomial {
        const std::size_t k = a.size();
        if (k == 0) return Polynomial::constant(1);
        if (k == 1) return a[0][0];
        Polynomial total;
        for (std::size_t j = 0; j < k; ++j) {
            if (a[0][j].is_zero()) continue;
            std::vector<std::vector<Polynomial>> minor;
            for (std::size_t i = 1; i < k; ++i) {
                std::vector<Polynomial> row;
                for (std::size_t c = 0; c < k; ++c)
                    if (c != j) row.push_back(a[i][c]);
                minor.push_back(std::move(row));
            }
            const Polynomial term = a[0][j] * self(self, minor);
            total += (j % 2 == 0) ? term : -term;
        }
        return total;
    };
    return det(det, m);
}

/// Invariant factors d1 | d2 | ... of an integer matrix (its nonzero
/// diagonal after Smith reduction), all positive.
inline std::vector<Integer> smith_normal_form(const std::vector<std::vector<Integer>>& input) {
    auto a = input;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& r : a)
        if (r.size() != cols) throw DomainError("ragged matrix");
    auto abs_of = [](const Integer& x) { return x < 0 ? Integer(-x) : x; };

    std::vector<Integer> factors;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Pivot: smallest nonzero absolute value in the trailing block.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs_of(a[i][j]) < abs_of(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) {
                std::sort(factors.begin(), factors.end());
                return factors;
            }
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const Integer f = a[i][t] / a[t][t];
                if (f != 0)
                    for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const Integer f = a[t][j] / a[t][t];
                if (f != 0)
                    for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the block; otherwise fold an offending row in.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        factors.push_back(abs_of(a[t][t]));
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

/// Invariant factors > 1 of X / <roots>, i.e. the torsion subgroup.
inline std::vector<Integer> torsion_factors(int rank, const std::vector<Root>& roots) {
    std::vector<std::vector<Integer>> m;
    for (const auto& r : roots) m.emplace_back(r.begin(), r.end());
    if (m.empty()) return {};
    (void)rank;
    std::vector<Integer> out;
    for (const auto& f : smith_normal_form(m))
        if (f > 1) out.push_back(f);
    return out;
}

inline constexpr std::size_t max_subsystem_roots = 16;

/// True when `subset` is symmetric and closed under addition inside `all`.
inline bool is_closed_subsystem(const std::vector<Root>& all, const std::vector<Root>& subset) {
    const std::set<Root> in_all(all.begin(), all.end());
    const std::set<Root> in_sub(subset.begin(), subset.end());
    for (const auto& a : subset) {
        if (!in_sub.count(RootDatum::negate(a))) return false;
        for (const auto& b : subset) {
            Root s(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            if (in_all.count(s) && !in_sub.count(s)) return false;
        }
    }
    return true;
}

/// All closed symmetric subsystems, including the empty one and the whole system.
inline std::vector<std::vector<Root>> closed_subsystems(const RootDatum& datum) {
    const auto& roots = datum.roots();
    if (roots.size() > max_subsystem_roots)
        throw TooLarge("closed subsystem enumeration is limited to " + std::to_string(max_subsystem_roots) + " roots");
    // One representative per {alpha, -alpha} pair.
    std::vector<Root> reps;
    for (const auto& r : roots)
        if (std::lexicographical_compare(RootDatum::negate(r).begin(), RootDatum::negate(r).end(), r.begin(), r.end()))
            reps.push_back(r);
    std::vector<std::vector<Root>> out;
    for (std::uint32_t mask = 0; mask < (1u << reps.size()); ++mask) {
        std::vector<Root> subset;
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (mask & (1u << i)) {
                subset.push_back(reps[i]);
                subset.push_back(RootDatum::negate(reps[i]));
            }
        if (is_closed_subsystem(roots, subset)) out.push_back(std::move(subset));
    }
    return out;
}

inline Integer lcm(const Integer& a, const Integer& b) { return a / boost::multiprecision::gcd(a, b) * b; }

/// Modulus of the datum: lcm over closed subsystems of the exponent of the
/// torsion subgroup of X / <subsystem> (its largest invariant factor).
inline Integer modulus(const RootDatum& datum) {
    Integer d = 1;
    for (const auto& sub : closed_subsystems(datum)) {
        const auto factors = torsion_factors(datum.rank(), sub);
        if (!factors.empty()) d = lcm(d, factors.back());
    }
    return d;
}

/// Product of the torsion invariant factors, i.e. |torsion(X / <roots>)|.
inline Integer torsion_order(int rank, const std::vector<Root>& roots) {
    Integer p = 1;
    for (const auto& f : torsion_factors(rank, roots)) p *= f;
    return p;
}

/// Reads the datum text format: a "rank = k" header, then one root per
/// line as space-separated integers. '#' starts a comment.
inline RootDatum parse_root_datum(std::string_view text, std::string label = {}) {
    std::istringstream in{std::string(text)};
    std::string line;
    int rank = 0;
    std::vector<Root> roots;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        const std::size_t line_offset = offset;
        offset += line.size() + 1;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (rank == 0) {
            const auto eq = line.find('=');
            std::string key = eq == std::string::npos ? std::string{} : line.substr(0, eq);
            key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
            if (key != "rank") throw ParseError("root datum must start with 'rank = k'", line_offset, "rank = k");
            try {
                rank = std::stoi(line.substr(eq + 1));
            } catch (const std::logic_error&) {
                throw ParseError("malformed rank", line_offset, "positive integer");
            }
            if (rank < 1) throw ParseError("rank must be positive", line_offset, "positive integer");
            continue;
        }
        std::istringstream fields(line);
        Root r;
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                r.push_back(std::stol(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::logic_error&) {
                throw ParseError("malformed integer '" + tok + "'", line_offset, "integer");
            }
        }
        roots.push_back(std::move(r));
    }
    if (rank == 0) throw ParseError("missing 'rank = k' header", 0, "rank = k");
    return RootDatum(rank, std::move(roots), std::move(label));
}

inline RootDatum load_root_datum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open root datum file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_root_datum(ss.str(), path);
}

/// Built-in data for the groups whose moduli are tabulated.
/// SL2, SL3: weight-lattice coordinates. Sp4: X = Z^2 with roots +-e1+-e2, +-2e_i.
/// G2: root-lattice coordinates (alpha1 short, alpha2 long). GL_n: X = Z^n.
inline const char* builtin_root_datum_text(std::string_view name) {
    if (name == "sl2") return "rank = 1\n2\n-2\n";
    if (name == "sl3") return "rank = 2\n2 -1\n-1 2\n1 1\n-2 1\n1 -2\n-1 -1\n";
    if (name == "sp4") return "rank = 2\n1 1\n1 -1\n-1 1\n-1 -1\n2 0\n-2 0\n0 2\n0 -2\n";
    if (name == "g2")
        return "rank = 2\n1 0\n0 1\n1 1\n2 1\n3 1\n3 2\n-1 0\n0 -1\n-1 -1\n-2 -1\n-3 -1\n-3 -2\n";
    if (name == "gl2") return "rank = 2\n1 -1\n-1 1\n";
    if (name == "gl3") return "rank = 3\n1 -1 0\n-1 1 0\n0 1 -1\n0 -1 1\n1 0 -1\n-1 0 1\n";
    return nullptr;
}

inline RootDatum builtin_root_datum(std::string_view name) {
    const char* text = builtin_root_datum_text(name);
    if (!text) throw DomainError("no built-in root datum named '" + std::string(name) + "'");
    return parse_root_datum(text, std::string(name));
}

} // namespace charstack::rootdata

#endif
