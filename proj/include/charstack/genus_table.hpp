#ifndef CHARSTACK_GENUS_TABLE_HPP
#define CHARSTACK_GENUS_TABLE_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "charstack/error.hpp"
#include "charstack/number_theory.hpp"
#include "charstack/poly_format.hpp"
#include "charstack/poly_parse.hpp"
#include "charstack/polynomial.hpp"
#include "charstack/rational.hpp"
#include "charstack/rootdata.hpp"

namespace charstack {

/// One genus: a row of a genus table.
struct GenusEntry {
    std::string label;
    long r = 0;
    int subsystem_rank = 0;
    Polynomial centralizer_order;
    Polynomial genus_number;
    std::vector<Polynomial> unipotent_degrees;
    /// Frobenius action on the central torus of the centralizer; identity if absent.
    std::optional<rootdata::IntMatrix> twist;
    /// Present in the classification but contributes nothing.
    bool vacuous = false;
    /// Cartan types of the subsystem components read from the label, e.g. {"A1", "~A1"}.
    std::vector<std::string> components;
    /// centralizer_order / Deg(rho), one per unipotent degree.
    std::vector<Polynomial> quotients;
};

struct GenusTable {
    std::string name;
    long modulus = 1;
    long residue = 0;
    Polynomial order;
    int dim = 0;
    int rank = 0;
    int dual_center_dim = 0;
    long pi1_derived = 1;
    std::vector<GenusEntry> entries;

    long positive_root_count() const { return (dim - rank) / 2; }
};

/// Degree, leading coefficient and value at 1 of a counting polynomial.
struct Invariants {
    long dimension = 0;
    Rational components;
    Rational euler;
};

inline Invariants invariants(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("invariants of the zero polynomial");
    return {p.degree(), p.leading_coefficient(), p.eval(1)};
}

/// Subsystem component types named by a genus label "(A1xA1,1)";
/// "0" and the empty-set sign denote the empty subsystem.
inline std::vector<std::string> label_components(const std::string& label) {
    std::string_view s = label;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ValidationError(label, "label", "label must look like (subsystem,twist)");
    s = s.substr(1, s.size() - 2);
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) throw ValidationError(label, "label", "label must look like (subsystem,twist)");
    std::string_view sub = s.substr(0, comma);
    while (!sub.empty() && sub.front() == ' ') sub.remove_prefix(1);
    while (!sub.empty() && sub.back() == ' ') sub.remove_suffix(1);
    std::vector<std::string> out;
    if (sub.empty() || sub == "0" || sub == "∅") return out;
    std::size_t start = 0;
    for (;;) {
        const auto x = sub.find('x', start);
        std::string part(sub.substr(start, x == std::string_view::npos ? std::string_view::npos : x - start));
        try {
            (void)rootdata::simple_shape(part);
        } catch (const DomainError&) {
            throw ValidationError(label, "label", "unknown subsystem component '" + part + "'");
        }
        out.push_back(part);
        if (x == std::string_view::npos) break;
        start = x + 1;
    }
    return out;
}

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

struct KeyValue {
    std::string value;
    std::size_t offset = 0;
};

using Block = std::map<std::string, KeyValue>;

inline Polynomial poly_value(const KeyValue& kv) {
    try {
        return parse_polynomial(kv.value);
    } catch (const ParseError& e) {
        throw ParseError("malformed polynomial '" + kv.value + "'", kv.offset + e.offset(), e.expected());
    }
}

inline long long_value(const KeyValue& kv) {
    try {
        const Integer v = parse_integer(kv.value);
        if (v < -1000000000 || v > 1000000000) throw ParseError("integer out of range", kv.offset, "small integer");
        return v.convert_to<long>();
    } catch (const ParseError& e) {
        throw ParseError("malformed integer '" + kv.value + "'", kv.offset, "integer");
    }
}

inline const KeyValue& required(const Block& block, const std::string& key, std::size_t block_offset) {
    const auto it = block.find(key);
    if (it == block.end()) throw ParseError("missing key '" + key + "'", block_offset, key + " = ...");
    return it->second;
}

inline rootdata::IntMatrix matrix_value(const KeyValue& kv) {
    rootdata::IntMatrix m;
    std::istringstream rows(kv.value);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::istringstream fields(row);
        std::vector<long> r;
        std::string tok;
        while (fields >> tok) r.push_back(long_value({tok, kv.offset}));
        m.push_back(std::move(r));
    }
    return m;
}

inline std::vector<Polynomial> poly_list(const KeyValue& kv) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    for (;;) {
        const auto semi = kv.value.find(';', start);
        const std::string piece = kv.value.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        out.push_back(poly_value({piece, kv.offset + start}));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

inline void validate_entry(const GenusTable& t, GenusEntry& e) {
    const std::string& L = e.label;
    e.components = label_components(L);

    rootdata::SplitGroupShape shape;
    int component_rank = 0;
    for (const auto& c : e.components) {
        const auto s = rootdata::simple_shape(c);
        shape.positive_root_count += s.positive_root_count;
        shape.invariant_degrees.insert(shape.invariant_degrees.end(), s.invariant_degrees.begin(), s.invariant_degrees.end());
        component_rank += s.semisimple_rank();
    }
    if (component_rank != e.subsystem_rank)
        throw ValidationError(L, "subsystem-rank",
                              "label has rank " + std::to_string(component_rank) + ", subsystem_rank is " + std::to_string(e.subsystem_rank));
    if (e.subsystem_rank > t.rank) throw ValidationError(L, "subsystem-rank", "subsystem rank exceeds group rank");

    if (e.r != t.positive_root_count() - shape.positive_root_count)
        throw ValidationError(L, "root-count",
                              "r = " + std::to_string(e.r) + " but |positive roots| - |positive subsystem roots| = " +
                                  std::to_string(t.positive_root_count() - shape.positive_root_count));

    if (e.genus_number.is_zero() || e.genus_number.degree() != t.rank - e.subsystem_rank)
        throw ValidationError(L, "genus-degree",
                              "genus number " + to_text(e.genus_number) + " must have degree " + std::to_string(t.rank - e.subsystem_rank));

    const std::size_t central_rank = static_cast<std::size_t>(t.rank - e.subsystem_rank);
    rootdata::WeylElement twist = rootdata::WeylElement::identity(central_rank);
    if (e.twist) {
        if (e.twist->size() != central_rank)
            throw ValidationError(L, "twist-size", "twist must act on a torus of rank " + std::to_string(central_rank));
        try {
            twist = rootdata::WeylElement(*e.twist);
        } catch (const DomainError& err) {
            throw ValidationError(L, "twist-size", err.what());
        }
    }
    const Polynomial expected = rootdata::order_polynomial_split(shape) * rootdata::torus_order_polynomial(twist);
    if (expected != e.centralizer_order)
        throw ValidationError(L, "centralizer-order",
                              "stored " + to_text(e.centralizer_order) + ", reconstructed " + to_text(expected));

    if (e.unipotent_degrees.empty()) throw ValidationError(L, "unipotent-degrees", "no unipotent degrees");
    e.quotients.clear();
    for (const auto& d : e.unipotent_degrees) {
        if (d.is_zero()) throw ValidationError(L, "unipotent-degrees", "zero unipotent degree");
        try {
            e.quotients.push_back(div_exact(e.centralizer_order, d));
        } catch (const NonExactDivision&) {
            throw ValidationError(L, "unipotent-divides", to_text(d) + " does not divide " + to_text(e.centralizer_order));
        }
    }
}

inline void validate_table(GenusTable& t) {
    const std::string& N = t.name;
    if (t.modulus < 1) throw ValidationError(N, "modulus", "modulus must be positive");
    if (t.residue < 0 || t.residue >= t.modulus) throw ValidationError(N, "residue-range", "residue must lie in [0, modulus)");
    if (t.rank < 0 || t.dim < t.rank || (t.dim - t.rank) % 2 != 0)
        throw ValidationError(N, "dimension", "dim - rank must be a nonnegative even number");
    if (t.order.degree() != t.dim)
        throw ValidationError(N, "group-order-degree", "order polynomial must have degree dim = " + std::to_string(t.dim));
    if (t.pi1_derived < 1) throw ValidationError(N, "pi1", "pi1_derived must be positive");

    std::set<std::string> labels;
    Polynomial class_number;
    for (auto& e : t.entries) {
        if (!labels.insert(e.label).second) throw ValidationError(e.label, "distinct-labels", "label appears twice");
        if (e.vacuous) continue;
        validate_entry(t, e);
        class_number += e.genus_number * Rational(static_cast<long>(e.unipotent_degrees.size()));
    }
    if (class_number.is_zero() || class_number.degree() != t.rank || class_number.leading_coefficient() != 1)
        throw ValidationError(N, "class-number", "class number polynomial " + to_text(class_number) + " must be monic of degree rank");
}

} // namespace detail

/// Reads and validates a genus table.
inline GenusTable parse_genus_table(std::string_view text) {
    using detail::Block;
    struct Section {
        std::string kind;
        std::size_t offset;
        Block keys;
    };
    std::vector<Section> sections;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        std::string_view line = text.substr(pos, end - pos);
        const std::size_t line_offset = pos;
        pos = end + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const std::string content = detail::trim(line);
        if (content.empty()) {
            if (nl == std::string_view::npos) break;
            continue;
        }
        if (content.front() == '[') {
            if (content != "[group]" && content != "[genus]")
                throw ParseError("unknown section '" + content + "'", line_offset, "[group] or [genus]");
            if (content == "[group]" && !sections.empty())
                throw ParseError("[group] must come first and only once", line_offset, "[genus]");
            if (content == "[genus]" && sections.empty()) throw ParseError("[genus] before [group]", line_offset, "[group]");
            sections.push_back({content.substr(1, content.size() - 2), line_offset, {}});
        } else {
            const auto eq = content.find('=');
            if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_offset, "'='");
            if (sections.empty()) throw ParseError("key outside of a section", line_offset, "[group]");
            const std::string key = detail::trim(std::string_view(content).substr(0, eq));
            const std::string value = detail::trim(std::string_view(content).substr(eq + 1));
            const std::size_t after_eq = line.find('=') + 1;
            const std::size_t lead = line.substr(after_eq).find_first_not_of(" \t");
            const std::size_t value_offset = line_offset + after_eq + (lead == std::string_view::npos ? 0 : lead);
            static const std::set<std::string> group_keys{"name", "modulus", "residue", "order", "dim", "rank", "dual_center_dim", "pi1_derived"};
            static const std::set<std::string> genus_keys{"label", "r", "subsystem_rank", "centralizer_order", "genus_number", "unipotent_degrees", "vacuous", "twist"};
            const auto& allowed = sections.back().kind == "group" ? group_keys : genus_keys;
            if (!allowed.count(key)) throw ParseError("unknown key '" + key + "'", line_offset, "a known key");
            if (!sections.back().keys.emplace(key, detail::KeyValue{value, value_offset}).second)
                throw ParseError("duplicate key '" + key + "'", line_offset, "a new key");
        }
        if (nl == std::string_view::npos) break;
    }
    if (sections.empty()) throw ParseError("missing [group] section", 0, "[group]");

    GenusTable t;
    const auto& g = sections.front();
    t.name = detail::required(g.keys, "name", g.offset).value;
    t.modulus = detail::long_value(detail::required(g.keys, "modulus", g.offset));
    t.residue = detail::long_value(detail::required(g.keys, "residue", g.offset));
    t.order = detail::poly_value(detail::required(g.keys, "order", g.offset));
    t.dim = static_cast<int>(detail::long_value(detail::required(g.keys, "dim", g.offset)));
    t.rank = static_cast<int>(detail::long_value(detail::required(g.keys, "rank", g.offset)));
    t.dual_center_dim = static_cast<int>(detail::long_value(detail::required(g.keys, "dual_center_dim", g.offset)));
    t.pi1_derived = detail::long_value(detail::required(g.keys, "pi1_derived", g.offset));

    for (std::size_t i = 1; i < sections.size(); ++i) {
        const auto& s = sections[i];
        GenusEntry e;
        e.label = detail::required(s.keys, "label", s.offset).value;
        if (const auto v = s.keys.find("vacuous"); v != s.keys.end()) {
            if (v->second.value != "true" && v->second.value != "false")
                throw ParseError("vacuous must be true or false", v->second.offset, "true or false");
            e.vacuous = v->second.value == "true";
        }
        if (e.vacuous) {
            t.entries.push_back(std::move(e));
            continue;
        }
        e.r = detail::long_value(detail::required(s.keys, "r", s.offset));
        e.subsystem_rank = static_cast<int>(detail::long_value(detail::required(s.keys, "subsystem_rank", s.offset)));
        e.centralizer_order = detail::poly_value(detail::required(s.keys, "centralizer_order", s.offset));
        e.genus_number = detail::poly_value(detail::required(s.keys, "genus_number", s.offset));
        e.unipotent_degrees = detail::poly_list(detail::required(s.keys, "unipotent_degrees", s.offset));
        if (const auto tw = s.keys.find("twist"); tw != s.keys.end()) e.twist = detail::matrix_value(tw->second);
        t.entries.push_back(std::move(e));
    }
    detail::validate_table(t);
    return t;
}

inline GenusTable load_genus_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open genus table '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_genus_table(ss.str());
}

/// Sum over genera of t^(r(2g-2)) * genus_number * sum_rho (|G_xi| / Deg rho)^(2g-2).
inline Polynomial count_polynomial_table(const GenusTable& t, long g) {
    if (g < 1) throw DomainError("genus must be at least 1");
    const auto e2 = static_cast<unsigned long>(2 * g - 2);
    Polynomial total;
    for (const auto& e : t.entries) {
        if (e.vacuous) continue;
        Polynomial inner;
        for (const auto& quo : e.quotients) inner += pow(quo, e2);
        total += Polynomial::monomial(1, static_cast<std::size_t>(e.r) * e2) * e.genus_number * inner;
    }
    return total;
}

/// Sum over genera of q^(r s) * genus_number(q) * sum_rho (|G_xi|(q) / Deg rho(q))^s,
/// which is the sum over irreducible characters of (|G(F_q)| / chi(1))^s, i.e.
/// |G(F_q)|^s times the representation zeta function. At s = 0 this counts
/// irreducible characters; at s = 2g - 2 it is the genus g count.
inline double zeta_table(const GenusTable& t, std::uint64_t q, double s, bool force_residue = false) {
    if (!as_prime_power(q)) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    if (!force_residue && static_cast<long>(q % static_cast<std::uint64_t>(t.modulus)) != t.residue)
        throw ResidueMismatch("q = " + std::to_string(q) + " is not " + std::to_string(t.residue) + " mod " + std::to_string(t.modulus));
    const double x = static_cast<double>(q);
    double total = 0.0;
    for (const auto& e : t.entries) {
        if (e.vacuous) continue;
        double inner = 0.0;
        for (const auto& quo : e.quotients) inner += std::pow(quo.eval_real(x), s);
        total += std::pow(x, static_cast<double>(e.r) * s) * e.genus_number.eval_real(x) * inner;
    }
    return total;
}

} // namespace charstack

#endif
