#ifndef CHARSTACK_ORACLE_CLASSES_HPP
#define CHARSTACK_ORACLE_CLASSES_HPP

#include <algorithm>
#include <cstdint>
#include <future>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "charstack/error.hpp"
#include "charstack/oracle/group.hpp"
#include "charstack/rational.hpp"

namespace charstack::oracle {

using Index = GroupTable::Index;

/// Conjugacy classes. Class ids are ordered by smallest member, so the
/// identity is class 0 and each representative is its class's first element.
struct ClassData {
    std::vector<std::uint32_t> class_of;
    std::vector<std::uint64_t> sizes;
    std::vector<Index> reps;
    std::vector<std::uint32_t> inverse_class;

    std::size_t count() const noexcept { return sizes.size(); }
};

/// Values on classes, indexed by class id.
using ClassFunction = std::vector<Integer>;

inline constexpr std::size_t full_conjugation_limit = 5000;

/// How conjugacy orbits are swept. Auto conjugates by every element up to
/// full_conjugation_limit elements and uses generators beyond that.
enum class ClassMethod { Auto, AllElements, Generators };

namespace detail {

inline constexpr std::uint32_t unassigned = std::numeric_limits<std::uint32_t>::max();

/// Runs body(i) for i in [0, count), split into contiguous chunks across threads.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::future<void>> tasks;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t start = 0; start < count; start += chunk)
        tasks.push_back(std::async(std::launch::async, [=, &body] {
            for (std::size_t i = start; i < std::min(count, start + chunk); ++i) body(i);
        }));
    for (auto& t : tasks) t.get();
}

/// Breadth-first closure of {1} under right multiplication; used to confirm
/// that a generating set really generates.
inline std::size_t generated_order(const GroupTable& g, const std::vector<Index>& gens) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Index> frontier{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        std::vector<Index> next;
        for (Index x : frontier)
            for (Index s : gens) {
                const Index y = g.mul(x, s);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return reached;
}

/// Labels the conjugacy orbit of x with id; returns its size.
inline std::uint64_t label_orbit(const GroupTable& g, Index x, std::uint32_t id, const std::vector<Index>& gens, bool use_all,
                                 std::vector<std::uint32_t>& class_of) {
    std::uint64_t size = 0;
    if (use_all) {
        for (Index s = 0; s < g.order(); ++s) {
            const Index y = g.mul(g.mul(s, x), g.inverse(s));
            if (class_of[y] == unassigned) {
                class_of[y] = id;
                ++size;
            }
        }
        return size;
    }
    std::vector<Index> frontier{x};
    class_of[x] = id;
    size = 1;
    while (!frontier.empty()) {
        std::vector<Index> next;
        for (Index y : frontier)
            for (Index s : gens) {
                const Index z = g.mul(g.mul(s, y), g.inverse(s));
                if (class_of[z] == unassigned) {
                    class_of[z] = id;
                    ++size;
                    next.push_back(z);
                }
            }
        frontier = std::move(next);
    }
    return size;
}

inline std::vector<Index> checked_generators(const GroupTable& g) {
    auto gens = g.generators();
    if (generated_order(g, gens) != g.order()) throw AssertionFailure("generating set does not generate the group");
    return gens;
}

inline void finish(const GroupTable& g, ClassData& c) {
    c.inverse_class.resize(c.count());
    for (std::size_t k = 0; k < c.count(); ++k) c.inverse_class[k] = c.class_of[g.inverse(c.reps[k])];
    std::uint64_t total = 0;
    for (auto s : c.sizes) total += s;
    if (total != g.order()) throw AssertionFailure("class sizes do not sum to the group order");
}

} // namespace detail

/// Orbit decomposition under conjugation: by every element when the group has
/// at most 5000 elements, otherwise by breadth-first closure over generators.
inline ClassData conjugacy_classes(const GroupTable& g, ClassMethod method = ClassMethod::Auto) {
    const bool use_all =
        method == ClassMethod::AllElements || (method == ClassMethod::Auto && g.order() <= full_conjugation_limit);
    const std::vector<Index> gens = use_all ? std::vector<Index>{} : detail::checked_generators(g);
    ClassData c;
    c.class_of.assign(g.order(), detail::unassigned);
    for (Index x = 0; x < g.order(); ++x) {
        if (c.class_of[x] != detail::unassigned) continue;
        const auto id = static_cast<std::uint32_t>(c.sizes.size());
        c.reps.push_back(x);
        c.sizes.push_back(detail::label_orbit(g, x, id, gens, use_all, c.class_of));
    }
    detail::finish(g, c);
    return c;
}

/// N(z) = #{(x, y) : [x, y] = z}, evaluated on representatives as
/// sum over x of |Cent(x)| * [x z conjugate to x].
inline ClassFunction commutator_class_function(const GroupTable& g, const ClassData& c, unsigned threads = 1) {
    ClassFunction n(c.count());
    detail::parallel_for(c.count(), threads, [&](std::size_t k) {
        std::uint64_t total = 0;
        const Index z = c.reps[k];
        for (Index x = 0; x < g.order(); ++x)
            if (c.class_of[g.mul(x, z)] == c.class_of[x]) total += g.order() / c.sizes[c.class_of[x]];
        n[k] = total;
    });
    return n;
}

/// Class-algebra structure counts: m[c][a * k + b] = #{w : w in a, w^-1 rep_c in b}.
inline std::vector<std::vector<std::uint64_t>> class_structure_counts(const GroupTable& g, const ClassData& c, unsigned threads = 1) {
    const std::size_t k = c.count();
    std::vector<std::vector<std::uint64_t>> m(k, std::vector<std::uint64_t>(k * k, 0));
    detail::parallel_for(k, threads, [&](std::size_t target) {
        const Index z = c.reps[target];
        for (Index w = 0; w < g.order(); ++w) ++m[target][c.class_of[w] * k + c.class_of[g.mul(g.inverse(w), z)]];
    });
    return m;
}

/// (f * h)(z) = sum over w of f(w) h(w^-1 z) for class functions f and h.
inline ClassFunction convolve(const std::vector<std::vector<std::uint64_t>>& structure, const ClassFunction& f, const ClassFunction& h) {
    const std::size_t k = f.size();
    ClassFunction out(k);
    for (std::size_t c = 0; c < k; ++c) {
        Integer s = 0;
        for (std::size_t a = 0; a < k; ++a) {
            if (f[a] == 0) continue;
            Integer row = 0;
            for (std::size_t b = 0; b < k; ++b)
                if (const auto cnt = structure[c][a * k + b]) row += h[b] * cnt;
            s += f[a] * row;
        }
        out[c] = s;
    }
    return out;
}

/// |Hom(surface group of genus g, G)| = N^{*g}(1).
inline Integer hom_count(const GroupTable& g, const ClassData& c, const ClassFunction& n, long genus, unsigned threads = 1) {
    if (genus < 1) throw DomainError("genus must be at least 1");
    if (genus == 1) return n[0];
    const auto structure = class_structure_counts(g, c, threads);
    ClassFunction f = n;
    for (long step = 1; step < genus; ++step) f = convolve(structure, f, n);
    return f[0];
}

/// |Hom(surface group, G)| / |G|, the point count of the character stack.
inline Rational groupoid_count(const GroupTable& g, const ClassData& c, const ClassFunction& n, long genus, unsigned threads = 1) {
    return Rational(hom_count(g, c, n, genus, threads)) / Rational(Integer(g.order()));
}

inline Rational groupoid_count(const GroupTable& g, long genus, unsigned threads = 1) {
    const ClassData c = conjugacy_classes(g);
    return groupoid_count(g, c, commutator_class_function(g, c, threads), genus, threads);
}

/// Text cache: a header line "kind n q order classes", then one line per
/// class holding the representative's matrix code and the class size.
inline void write_class_cache(std::ostream& out, const GroupTable& g, const ClassData& c) {
    out << to_string(g.kind()) << ' ' << g.n() << ' ' << g.q() << ' ' << g.order() << ' ' << c.count() << '\n';
    for (std::size_t k = 0; k < c.count(); ++k) out << g.code(c.reps[k]) << ' ' << c.sizes[k] << '\n';
}

/// Reads a cache written for the same group, rebuilding every orbit from its
/// stored representative and checking the stored sizes.
inline ClassData read_class_cache(std::istream& in, const GroupTable& g) {
    std::string kind;
    int n = 0;
    std::uint64_t q = 0, order = 0;
    std::size_t count = 0;
    if (!(in >> kind >> n >> q >> order >> count)) throw ParseError("malformed class cache header", 0, "kind n q order classes");
    if (kind != to_string(g.kind()) || n != g.n() || q != g.q() || order != g.order())
        throw ValidationError("class cache", "group", "cache was written for a different group");
    const bool use_all = g.order() <= full_conjugation_limit;
    const std::vector<Index> gens = use_all ? std::vector<Index>{} : detail::checked_generators(g);
    ClassData c;
    c.class_of.assign(g.order(), detail::unassigned);
    for (std::size_t k = 0; k < count; ++k) {
        std::uint64_t code = 0, size = 0;
        if (!(in >> code >> size)) throw ParseError("malformed class cache line", k + 1, "code size");
        const auto rep = g.find_code(code);
        if (!rep) throw ValidationError("class cache", "representative", "code " + std::to_string(code) + " is not a group element");
        if (c.class_of[*rep] != detail::unassigned) throw ValidationError("class cache", "representative", "two representatives share a class");
        const auto id = static_cast<std::uint32_t>(k);
        const std::uint64_t got = detail::label_orbit(g, *rep, id, gens, use_all, c.class_of);
        if (got != size) throw ValidationError("class cache", "size", "stored size " + std::to_string(size) + ", orbit has " + std::to_string(got));
        c.reps.push_back(*rep);
        c.sizes.push_back(size);
    }
    if (c.class_of[0] != 0) throw ValidationError("class cache", "identity", "the first class must be the identity");
    if (std::find(c.class_of.begin(), c.class_of.end(), detail::unassigned) != c.class_of.end())
        throw ValidationError("class cache", "coverage", "classes do not cover the group");
    detail::finish(g, c);
    return c;
}

} // namespace charstack::oracle

#endif
