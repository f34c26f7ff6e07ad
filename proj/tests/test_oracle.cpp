#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "charstack/oracle.hpp"

using namespace charstack;
using namespace charstack::oracle;

namespace {

// Gauss: number of monic irreducibles of degree d over F_p.
long gauss_count(long p, long d) {
    long total = 0;
    for (long e = 1; e <= d; ++e)
        if (d % e == 0) {
            long pe = 1;
            for (long i = 0; i < e; ++i) pe *= p;
            total += mobius(static_cast<std::uint64_t>(d / e)) * pe;
        }
    return total / d;
}

// N(z) by enumerating all pairs (x, y) directly.
std::vector<std::uint64_t> commutators_by_pairs(const GroupTable& g, const ClassData& c) {
    std::vector<std::uint64_t> per_element(g.order(), 0);
    for (Index x = 0; x < g.order(); ++x)
        for (Index y = 0; y < g.order(); ++y) ++per_element[g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y)))];
    std::vector<std::uint64_t> out(c.count());
    for (std::size_t k = 0; k < c.count(); ++k) out[k] = per_element[c.reps[k]];
    return out;
}

// Number of (x1, y1, x2, y2) with [x1, y1][x2, y2] = 1, by enumerating quadruples.
std::uint64_t genus_two_homs_by_enumeration(const GroupTable& g) {
    std::vector<Index> comm;
    for (Index x = 0; x < g.order(); ++x)
        for (Index y = 0; y < g.order(); ++y) comm.push_back(g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y))));
    std::map<Index, std::uint64_t> count;
    for (Index z : comm) ++count[z];
    std::uint64_t total = 0;
    for (Index z : comm) total += count[g.inverse(z)];
    return total;
}

std::vector<std::tuple<GroupKind, int, int>> small_groups() {
    return {{GroupKind::GL, 1, 5}, {GroupKind::GL, 2, 2}, {GroupKind::GL, 2, 3}, {GroupKind::GL, 2, 4},
            {GroupKind::GL, 2, 5}, {GroupKind::GL, 3, 2}, {GroupKind::SL, 2, 3}, {GroupKind::SL, 2, 4},
            {GroupKind::SL, 2, 5}, {GroupKind::PGL, 2, 3}, {GroupKind::PGL, 2, 4}, {GroupKind::PGL, 2, 5},
            {GroupKind::PGL, 2, 7}};
}

} // namespace

TEST(FqField, ShippedReductionPolynomials) {
    EXPECT_EQ(FqField(4).reduction_polynomial(), (std::vector<unsigned>{1, 1, 1}));
    EXPECT_EQ(FqField(8).reduction_polynomial(), (std::vector<unsigned>{1, 1, 0, 1}));
    EXPECT_EQ(FqField(9).reduction_polynomial(), (std::vector<unsigned>{1, 0, 1}));
    EXPECT_EQ(FqField(16).reduction_polynomial().size(), 5u);
    EXPECT_THROW(FqField(6), NotPrimePower);
    EXPECT_THROW(FqField(1), NotPrimePower);
    EXPECT_THROW(FqField(512), TooLarge);
}

TEST(FqField, IrreducibilityCheckMatchesGaussCount) {
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned d = 1; d <= (p == 2 ? 7u : p == 3 ? 4u : 3u); ++d) {
            std::uint64_t total = 1;
            for (unsigned i = 0; i < d; ++i) total *= p;
            long found = 0;
            for (std::uint64_t code = 0; code < total; ++code) {
                std::vector<unsigned> f(d + 1);
                std::uint64_t x = code;
                for (unsigned i = 0; i < d; ++i, x /= p) f[i] = static_cast<unsigned>(x % p);
                f[d] = 1;
                found += FqField::is_irreducible(f, p);
            }
            EXPECT_EQ(found, gauss_count(p, d)) << "p=" << p << " d=" << d;
        }
}

TEST(FqField, FieldAxiomsHoldExhaustively) {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
        const FqField f(q);
        for (unsigned a = 0; a < q; ++a) {
            const auto ea = static_cast<Elem>(a);
            EXPECT_EQ(f.add(ea, f.neg(ea)), 0);
            EXPECT_EQ(f.mul(ea, 1), ea);
            if (a != 0) {
                EXPECT_EQ(f.mul(ea, f.inv(ea)), 1);
            }
            for (unsigned b = 0; b < q; ++b) {
                const auto eb = static_cast<Elem>(b);
                EXPECT_EQ(f.add(ea, eb), f.add(eb, ea));
                EXPECT_EQ(f.mul(ea, eb), f.mul(eb, ea));
                if (q > 9) continue;
                for (unsigned c = 0; c < q; ++c) {
                    const auto ec = static_cast<Elem>(c);
                    EXPECT_EQ(f.mul(f.mul(ea, eb), ec), f.mul(ea, f.mul(eb, ec)));
                    EXPECT_EQ(f.mul(ea, f.add(eb, ec)), f.add(f.mul(ea, eb), f.mul(ea, ec)));
                }
            }
        }
        // The primitive element has multiplicative order q - 1.
        Elem x = f.primitive();
        unsigned order = 1;
        while (x != 1) {
            x = f.mul(x, f.primitive());
            ++order;
        }
        EXPECT_EQ(order, q - 1);
        EXPECT_THROW(f.inv(0), DomainError);
    }
}

TEST(GroupTable, Orders) {
    EXPECT_EQ(GroupTable(GroupKind::GL, 2, 2).order(), 6u);
    EXPECT_EQ(GroupTable(GroupKind::PGL, 2, 3).order(), 24u);
    EXPECT_EQ(GroupTable(GroupKind::SL, 2, 5).order(), 120u);
    EXPECT_EQ(GroupTable(GroupKind::GL, 3, 2).order(), 168u);
    EXPECT_EQ(GroupTable(GroupKind::PGL, 3, 4).order(), 60480u);
    EXPECT_EQ(group_order(GroupKind::PGL, 3, 4), Integer(63 * 60 * 48 / 3));
}

TEST(GroupTable, Errors) {
    EXPECT_THROW(GroupTable(GroupKind::GL, 3, 4), CapExceeded);
    EXPECT_THROW(GroupTable(GroupKind::GL, 2, 6), NotPrimePower);
    EXPECT_THROW(GroupTable(GroupKind::GL, 2, 5, 100), CapExceeded);
    EXPECT_THROW(GroupTable(GroupKind::GL, 0, 2), DomainError);
    EXPECT_THROW(parse_group_kind("so"), DomainError);
    EXPECT_EQ(parse_group_kind("pgl"), GroupKind::PGL);
}

TEST(GroupTable, GroupAxioms) {
    std::mt19937 rng(99);
    for (auto [kind, n, q] : small_groups()) {
        const GroupTable g(kind, n, static_cast<std::uint64_t>(q));
        std::uniform_int_distribution<Index> pick(0, static_cast<Index>(g.order() - 1));
        for (Index x = 0; x < g.order(); ++x) {
            EXPECT_EQ(g.mul(0, x), x);
            EXPECT_EQ(g.mul(x, g.inverse(x)), 0u);
        }
        for (int t = 0; t < 300; ++t) {
            const Index a = pick(rng), b = pick(rng), c = pick(rng);
            EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
    }
}

TEST(ConjugacyClasses, SmallExamples) {
    const GroupTable gl22(GroupKind::GL, 2, 2);
    auto c = conjugacy_classes(gl22);
    auto sizes = c.sizes;
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::uint64_t>{1, 2, 3}));
    EXPECT_EQ(conjugacy_classes(GroupTable(GroupKind::GL, 2, 3)).count(), 8u);
    EXPECT_EQ(conjugacy_classes(GroupTable(GroupKind::PGL, 2, 3)).count(), 5u);
}

TEST(ConjugacyClasses, ClassNumbersOfClassicalFamilies) {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto uq = static_cast<std::uint64_t>(q);
        EXPECT_EQ(conjugacy_classes(GroupTable(GroupKind::GL, 2, uq)).count(), uq * uq - 1) << q;
        EXPECT_EQ(conjugacy_classes(GroupTable(GroupKind::SL, 2, uq)).count(), q % 2 ? uq + 4 : uq + 1) << q;
        EXPECT_EQ(conjugacy_classes(GroupTable(GroupKind::PGL, 2, uq)).count(), q % 2 ? uq + 2 : uq + 1) << q;
    }
    EXPECT_EQ(conjugacy_classes(GroupTable(GroupKind::GL, 3, 2)).count(), 6u);
}

TEST(ConjugacyClasses, GeneratorSweepAgreesWithFullSweep) {
    for (auto [kind, n, q] : small_groups()) {
        const GroupTable g(kind, n, static_cast<std::uint64_t>(q));
        const auto a = conjugacy_classes(g, ClassMethod::AllElements);
        const auto b = conjugacy_classes(g, ClassMethod::Generators);
        EXPECT_EQ(a.class_of, b.class_of);
        EXPECT_EQ(a.sizes, b.sizes);
        for (std::size_t k = 0; k < a.count(); ++k) EXPECT_EQ(a.inverse_class[a.inverse_class[k]], k);
        EXPECT_EQ(a.reps[0], 0u);
        EXPECT_EQ(a.sizes[0], 1u);
    }
}

TEST(CommutatorClassFunction, MatchesPairEnumeration) {
    for (auto [kind, n, q] : small_groups()) {
        const GroupTable g(kind, n, static_cast<std::uint64_t>(q));
        if (g.order() > 500) continue;
        const auto c = conjugacy_classes(g);
        const auto nfun = commutator_class_function(g, c);
        const auto brute = commutators_by_pairs(g, c);
        for (std::size_t k = 0; k < c.count(); ++k) EXPECT_EQ(nfun[k], Integer(brute[k]));
    }
}

TEST(CommutatorClassFunction, Identities) {
    for (auto [kind, n, q] : small_groups()) {
        const GroupTable g(kind, n, static_cast<std::uint64_t>(q));
        const auto c = conjugacy_classes(g);
        const auto nfun = commutator_class_function(g, c);
        const Integer order(g.order());
        Integer total = 0;
        for (std::size_t k = 0; k < c.count(); ++k) {
            total += Integer(c.sizes[k]) * nfun[k];
            EXPECT_EQ(nfun[k], nfun[c.inverse_class[k]]);
        }
        EXPECT_EQ(total, order * order);
        EXPECT_EQ(nfun[0], Integer(c.count()) * order);
        EXPECT_EQ(groupoid_count(g, c, nfun, 1), Rational(Integer(c.count())));
        for (long genus = 2; genus <= 3; ++genus) {
            const Rational v = groupoid_count(g, c, nfun, genus);
            EXPECT_TRUE(is_integer(v));
            EXPECT_GT(v, 0);
        }
    }
}

TEST(HomCount, ConvolutionPowersSumToAllTuples) {
    const GroupTable g(GroupKind::GL, 2, 3);
    const auto c = conjugacy_classes(g);
    const auto nfun = commutator_class_function(g, c);
    const auto structure = class_structure_counts(g, c);
    ClassFunction f = nfun;
    for (unsigned genus = 1; genus <= 3; ++genus) {
        Integer total = 0;
        for (std::size_t k = 0; k < c.count(); ++k) total += Integer(c.sizes[k]) * f[k];
        EXPECT_EQ(total, ipow(Integer(g.order()), 2 * genus));
        f = convolve(structure, f, nfun);
    }
}

TEST(HomCount, SmallValues) {
    const GroupTable gl22(GroupKind::GL, 2, 2);
    const auto c = conjugacy_classes(gl22);
    const auto nfun = commutator_class_function(gl22, c);
    EXPECT_EQ(hom_count(gl22, c, nfun, 2), 486);
    EXPECT_EQ(groupoid_count(gl22, c, nfun, 2), 81);
    EXPECT_EQ(hom_count(gl22, c, nfun, 2), Integer(genus_two_homs_by_enumeration(gl22)));
    EXPECT_THROW(hom_count(gl22, c, nfun, 0), DomainError);

    const GroupTable pgl23(GroupKind::PGL, 2, 3);
    EXPECT_EQ(groupoid_count(pgl23, 2), 1424);
    const auto cp = conjugacy_classes(pgl23);
    EXPECT_EQ(hom_count(pgl23, cp, commutator_class_function(pgl23, cp), 2), Integer(genus_two_homs_by_enumeration(pgl23)));
}

TEST(HomCount, ThreadedMatchesSerial) {
    const GroupTable g(GroupKind::PGL, 2, 7);
    const auto c = conjugacy_classes(g);
    const auto serial = commutator_class_function(g, c, 1);
    const auto threaded = commutator_class_function(g, c, 3);
    EXPECT_EQ(serial, threaded);
    EXPECT_EQ(hom_count(g, c, serial, 3, 1), hom_count(g, c, serial, 3, 4));
}

TEST(ClassCache, RoundTrip) {
    const GroupTable g(GroupKind::SL, 2, 5);
    const auto c = conjugacy_classes(g);
    std::stringstream ss;
    write_class_cache(ss, g, c);
    const auto back = read_class_cache(ss, g);
    EXPECT_EQ(back.class_of, c.class_of);
    EXPECT_EQ(back.sizes, c.sizes);
    EXPECT_EQ(back.reps, c.reps);
    EXPECT_EQ(back.inverse_class, c.inverse_class);
}

TEST(ClassCache, RejectsMismatches) {
    const GroupTable g(GroupKind::GL, 2, 3);
    const auto c = conjugacy_classes(g);
    std::stringstream ss;
    write_class_cache(ss, g, c);
    const std::string text = ss.str();

    std::stringstream other(text);
    EXPECT_THROW(read_class_cache(other, GroupTable(GroupKind::PGL, 2, 3)), ValidationError);

    std::string bad_size = text;
    const auto line_end = bad_size.find('\n', bad_size.find('\n') + 1);
    bad_size.replace(line_end - 1, 1, "7");
    std::stringstream s1(bad_size);
    EXPECT_THROW(read_class_cache(s1, g), ValidationError);

    std::stringstream truncated(text.substr(0, text.size() / 2));
    EXPECT_THROW(read_class_cache(truncated, g), ParseError);
    std::stringstream garbage("nonsense");
    EXPECT_THROW(read_class_cache(garbage, g), ParseError);
}
