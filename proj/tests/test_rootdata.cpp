#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "charstack/poly_parse.hpp"
#include "charstack/rootdata.hpp"

using namespace charstack;
using namespace charstack::rootdata;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

// Closure of a root subset under negation and sums landing in the full system,
// computed by iterating to a fixed point.
std::set<Root> closure(const std::vector<Root>& all, std::set<Root> s) {
    const std::set<Root> in_all(all.begin(), all.end());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Root> cur(s.begin(), s.end());
        for (const auto& a : cur) {
            if (s.insert(RootDatum::negate(a)).second) grew = true;
            for (const auto& b : cur) {
                Root c = a;
                for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
                if (in_all.count(c) && s.insert(c).second) grew = true;
            }
        }
    }
    return s;
}

// Determinant over the rationals by elimination.
Rational det_rational(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

// Determinantal divisors: D_k = gcd of all k x k minors. Invariant factors are D_k / D_{k-1}.
std::vector<Integer> invariant_factors_by_minors(const std::vector<std::vector<Integer>>& m) {
    const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    auto subsets = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
            if (static_cast<std::size_t>(__builtin_popcount(mask)) == k) {
                std::vector<std::size_t> s;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) s.push_back(i);
                out.push_back(s);
            }
        return out;
    };
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        Integer g = 0;
        for (const auto& rs : subsets(rows, k))
            for (const auto& cs : subsets(cols, k)) {
                std::vector<std::vector<Rational>> minor;
                for (auto r : rs) {
                    std::vector<Rational> row;
                    for (auto c : cs) row.emplace_back(m[r][c]);
                    minor.push_back(row);
                }
                const Integer d = numerator_of(det_rational(minor));
                g = boost::multiprecision::gcd(g, d < 0 ? Integer(-d) : d);
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Poincare polynomial sum_w t^l(w) of the Weyl group generated by reflections in a
// Euclidean root system, with l(w) the number of positive roots made negative.
Polynomial weyl_length_polynomial(const std::vector<Root>& roots) {
    auto dot = [](const Root& a, const Root& b) {
        long s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    std::map<Root, std::size_t> index;
    for (std::size_t i = 0; i < roots.size(); ++i) index[roots[i]] = i;
    // Generic functional picks the positive system.
    Root f(roots[0].size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = 1000 - 37 * static_cast<long>(i) * static_cast<long>(i + 3);
    using Perm = std::vector<std::size_t>;
    std::vector<Perm> gens;
    for (const auto& a : roots) {
        Perm p(roots.size());
        for (std::size_t j = 0; j < roots.size(); ++j) {
            const long num = 2 * dot(roots[j], a);
            const long den = dot(a, a);
            EXPECT_EQ(num % den, 0);
            Root img = roots[j];
            for (std::size_t k = 0; k < img.size(); ++k) img[k] -= num / den * a[k];
            p[j] = index.at(img);
        }
        gens.push_back(p);
    }
    Perm id(roots.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    std::set<Perm> group{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& w : frontier)
            for (const auto& s : gens) {
                Perm ws(w.size());
                for (std::size_t i = 0; i < w.size(); ++i) ws[i] = s[w[i]];
                if (group.insert(ws).second) next.push_back(ws);
            }
        frontier = std::move(next);
    }
    Polynomial out;
    for (const auto& w : group) {
        std::size_t len = 0;
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (dot(roots[i], f) > 0 && dot(roots[w[i]], f) < 0) ++len;
        out += Polynomial::monomial(1, len);
    }
    return out;
}

// Euclidean realizations with a W-invariant dot product.
std::vector<Root> euclidean_roots(const std::string& type) {
    std::vector<Root> pos;
    if (type == "A1") pos = {{1, -1}};
    if (type == "A2") pos = {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
    if (type == "B2") pos = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    if (type == "G2") pos = {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}, {2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
    if (type == "A3") pos = {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {1, 0, -1, 0}, {0, 1, 0, -1}, {1, 0, 0, -1}};
    std::vector<Root> all = pos;
    for (const auto& r : pos) all.push_back(RootDatum::negate(r));
    return all;
}

} // namespace

TEST(RootDatum, ParsesBuiltinsAndFiles) {
    for (const char* name : {"sl2", "sl3", "sp4", "g2", "gl2", "gl3"}) {
        const RootDatum builtin = builtin_root_datum(name);
        const RootDatum file = load_root_datum(std::string(CHARSTACK_DEFAULT_DATA_DIR) + "/rootdata/" + name + ".datum");
        EXPECT_EQ(builtin.rank(), file.rank()) << name;
        EXPECT_EQ(std::set<Root>(builtin.roots().begin(), builtin.roots().end()),
                  std::set<Root>(file.roots().begin(), file.roots().end()))
            << name;
    }
}

TEST(RootDatum, RejectsMalformedInput) {
    EXPECT_THROW(parse_root_datum("1\n-1\n"), ParseError);
    EXPECT_THROW(parse_root_datum("rank = 1\n2 x\n"), ParseError);
    EXPECT_THROW(parse_root_datum("rank = 1\n2\n"), ValidationError);
    EXPECT_THROW(parse_root_datum("rank = 2\n1\n-1\n"), ValidationError);
    EXPECT_THROW(parse_root_datum("rank = 1\n2\n-2\n2\n"), ValidationError);
    EXPECT_THROW(parse_root_datum("rank = 1\n0\n"), ValidationError);
    EXPECT_THROW(builtin_root_datum("e8"), DomainError);
}

TEST(ClosedSubsystems, A1HasOnlyTrivialSubsystems) {
    const auto subs = closed_subsystems(builtin_root_datum("sl2"));
    ASSERT_EQ(subs.size(), 2u);
    EXPECT_TRUE(subs[0].empty());
    EXPECT_EQ(subs[1].size(), 2u);
}

TEST(ClosedSubsystems, B2ContainsLongA1xA1) {
    const auto subs = closed_subsystems(builtin_root_datum("sp4"));
    const std::set<Root> long_pair{{2, 0}, {-2, 0}, {0, 2}, {0, -2}};
    bool found = false;
    for (const auto& s : subs) found |= std::set<Root>(s.begin(), s.end()) == long_pair;
    EXPECT_TRUE(found);
    const std::set<Root> short_pair{{1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    for (const auto& s : subs) EXPECT_NE(std::set<Root>(s.begin(), s.end()), short_pair);
}

TEST(ClosedSubsystems, G2ContainsLongA2) {
    const auto subs = closed_subsystems(builtin_root_datum("g2"));
    const std::set<Root> long_a2{{0, 1}, {3, 1}, {3, 2}, {0, -1}, {-3, -1}, {-3, -2}};
    bool found = false;
    for (const auto& s : subs) found |= std::set<Root>(s.begin(), s.end()) == long_a2;
    EXPECT_TRUE(found);
}

TEST(ClosedSubsystems, AgreeWithFixedPointClosure) {
    for (const char* name : {"sl2", "sl3", "sp4", "g2", "gl2", "gl3"}) {
        const RootDatum d = builtin_root_datum(name);
        std::set<std::set<Root>> expected;
        const auto& roots = d.roots();
        for (std::uint32_t mask = 0; mask < (1u << roots.size()); ++mask) {
            std::set<Root> s;
            for (std::size_t i = 0; i < roots.size(); ++i)
                if (mask & (1u << i)) s.insert(roots[i]);
            if (closure(roots, s) == s) expected.insert(s);
        }
        std::set<std::set<Root>> got;
        for (const auto& s : closed_subsystems(d)) {
            EXPECT_EQ(closure(roots, std::set<Root>(s.begin(), s.end())), std::set<Root>(s.begin(), s.end()));
            got.insert(std::set<Root>(s.begin(), s.end()));
        }
        EXPECT_EQ(got, expected) << name;
    }
}

TEST(ClosedSubsystems, TooLarge) {
    std::vector<Root> roots;
    for (long k = 1; k <= 9; ++k) {
        roots.push_back({k});
        roots.push_back({-k});
    }
    EXPECT_THROW(closed_subsystems(RootDatum(1, roots)), TooLarge);
}

TEST(SmithNormalForm, Examples) {
    EXPECT_EQ(smith_normal_form({{2}}), std::vector<Integer>{2});
    EXPECT_EQ(smith_normal_form({{2, -1}}), std::vector<Integer>{1});
    EXPECT_EQ(smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), (std::vector<Integer>{1, 1, 1}));
    EXPECT_EQ(smith_normal_form({{2, 0}, {0, 3}}), (std::vector<Integer>{1, 6}));
    EXPECT_TRUE(smith_normal_form({{0, 0}}).empty());
}

TEST(SmithNormalForm, MatchesDeterminantalDivisors) {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
    for (int trial = 0; trial < 400; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<Integer>> m(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(cols)));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng) * (trial % 3 == 0 ? 1 : entry(rng) % 3);
        const auto got = smith_normal_form(m);
        EXPECT_EQ(got, invariant_factors_by_minors(m)) << "trial " << trial;
        for (std::size_t i = 1; i < got.size(); ++i) EXPECT_EQ(got[i] % got[i - 1], 0);
        if (rows == cols) {
            std::vector<std::vector<Rational>> q;
            for (const auto& row : m) q.emplace_back(row.begin(), row.end());
            const Rational det = det_rational(q);
            if (det != 0) {
                Integer prod = 1;
                for (const auto& f : got) prod *= f;
                EXPECT_EQ(Rational(prod), det < 0 ? Rational(-det) : det);
            }
        }
    }
}

TEST(Modulus, EmbeddedData) {
    EXPECT_EQ(modulus(builtin_root_datum("sl2")), 2);
    EXPECT_EQ(modulus(builtin_root_datum("sl3")), 3);
    EXPECT_EQ(modulus(builtin_root_datum("sp4")), 2);
    EXPECT_EQ(modulus(builtin_root_datum("g2")), 6);
    EXPECT_EQ(modulus(builtin_root_datum("gl2")), 1);
    EXPECT_EQ(modulus(builtin_root_datum("gl3")), 1);
}

TEST(Modulus, TorsionOfLongA1xA1InSp4) {
    // X / <2e1, 2e2> is (Z/2)^2: order 4, exponent 2.
    const std::vector<Root> long_pair{{2, 0}, {-2, 0}, {0, 2}, {0, -2}};
    EXPECT_EQ(torsion_order(2, long_pair), 4);
    EXPECT_EQ(torsion_factors(2, long_pair), (std::vector<Integer>{2, 2}));
}

TEST(OrderPolynomial, SplitShapes) {
    EXPECT_EQ(order_polynomial_split({4, {2, 4}, 0}), P("q^4*(q^2-1)*(q^4-1)"));
    EXPECT_EQ(order_polynomial_split({1, {2}, 0}), P("q*(q^2-1)"));
    EXPECT_EQ(order_polynomial_split({6, {2, 6}, 0}), P("q^6*(q^2-1)*(q^6-1)"));
    EXPECT_EQ(order_polynomial_split({0, {}, 2}), P("(q-1)^2"));
    EXPECT_EQ(order_polynomial_split({1, {2}, 1}), P("q*(q-1)*(q^2-1)"));
}

TEST(OrderPolynomial, DegreesAgreeWithWeylGroupLengths) {
    for (const char* type : {"A1", "A2", "B2", "G2", "A3"}) {
        const auto roots = euclidean_roots(type);
        const SplitGroupShape shape = simple_shape(type);
        const int ss_rank = shape.semisimple_rank();
        EXPECT_EQ(static_cast<std::size_t>(shape.positive_root_count) * 2, roots.size()) << type;
        const Polynomial via_weyl = Polynomial::monomial(1, static_cast<std::size_t>(shape.positive_root_count)) *
                                    pow(Polynomial{-1, 1}, static_cast<unsigned long>(ss_rank)) *
                                    weyl_length_polynomial(roots);
        EXPECT_EQ(order_polynomial_split(shape), via_weyl) << type;
    }
    EXPECT_EQ(simple_shape("~A1").positive_root_count, 1);
    EXPECT_EQ(simple_shape("C2").invariant_degrees, (std::vector<int>{2, 4}));
    EXPECT_THROW(simple_shape("E9"), DomainError);
    EXPECT_THROW(simple_shape("G3"), DomainError);
}

TEST(TorusOrderPolynomial, Examples) {
    EXPECT_EQ(torus_order_polynomial(WeylElement::identity(2)), P("(q-1)^2"));
    EXPECT_EQ(torus_order_polynomial(WeylElement(IntMatrix{{-1, 0}, {0, -1}})), P("(q+1)^2"));
    // Coxeter element of G2 in simple-root coordinates.
    EXPECT_EQ(torus_order_polynomial(WeylElement(IntMatrix{{2, -3}, {1, -1}})), P("q^2-q+1"));
    EXPECT_EQ(torus_order_polynomial(WeylElement(IntMatrix{{-1}})), P("q+1"));
    EXPECT_THROW(WeylElement(IntMatrix{{2, 0}, {0, 1}}), DomainError);
    EXPECT_THROW(WeylElement(IntMatrix{{1, 0}}), DomainError);
}

TEST(TorusOrderPolynomial, MatchesPointwiseDeterminant) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    int checked = 0;
    while (checked < 200) {
        const std::size_t n = 1 + static_cast<std::size_t>(checked % 3);
        IntMatrix m(n, std::vector<long>(n));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        std::vector<std::vector<Rational>> q;
        for (const auto& row : m) q.emplace_back(row.begin(), row.end());
        const Rational det = det_rational(q);
        if (det != 1 && det != -1) continue;
        const Polynomial chi = torus_order_polynomial(WeylElement(m));
        for (int t = -3; t <= 3; ++t) {
            auto shifted = q;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) shifted[i][j] = (i == j ? Rational(t) : Rational(0)) - q[i][j];
            EXPECT_EQ(chi.eval(t), det_rational(shifted));
        }
        ++checked;
    }
}
