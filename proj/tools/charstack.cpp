#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charstack/genus_table.hpp"
#include "charstack/gln.hpp"
#include "charstack/oracle.hpp"
#include "charstack/poly_format.hpp"
#include "charstack/rootdata.hpp"

namespace {

using namespace charstack;
using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_computation = 2;
constexpr int exit_mismatch = 3;

struct Common {
    std::string format = "text";
    unsigned threads = 1;
};

std::string data_dir() {
    if (const char* env = std::getenv("CHARSTACK_DATA_DIR"); env && *env) return env;
#ifdef CHARSTACK_DEFAULT_DATA_DIR
    return CHARSTACK_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

// A path as given, else relative to the data directory, optionally with a default extension.
std::string resolve(const std::string& name, const std::string& subdir, const std::string& extension) {
    const std::vector<fs::path> candidates{
        name,
        fs::path(data_dir()) / subdir / name,
        fs::path(data_dir()) / subdir / (name + extension),
    };
    for (const auto& c : candidates)
        if (fs::is_regular_file(c)) return c.string();
    throw Error("cannot find '" + name + "' (looked in the working directory and " + (fs::path(data_dir()) / subdir).string() + ")");
}

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) out += ' ';
        out += argv[i];
    }
    return out;
}

struct Record {
    std::string command;
    std::optional<Polynomial> polynomial;
    std::optional<std::string> scalar;
    std::optional<Invariants> invariants;
    json extra = json::object();
    double seconds = 0.0;
};

json to_json(const Record& r) {
    json j{{"command", r.command}, {"timing", {{"seconds", r.seconds}}}};
    if (r.polynomial) {
        j["polynomial"] = charstack::to_json(*r.polynomial);
        j["text"] = to_text(*r.polynomial);
    }
    if (r.scalar) j["scalar"] = *r.scalar;
    if (r.invariants)
        j["invariants"] = {{"dimension", r.invariants->dimension},
                           {"components", to_string(r.invariants->components)},
                           {"euler", to_string(r.invariants->euler)}};
    for (const auto& [k, v] : r.extra.items()) j[k] = v;
    return j;
}

void emit(const Record& r, const Common& c) {
    if (c.format == "json") {
        std::cout << to_json(r).dump(2) << '\n';
        return;
    }
    if (r.polynomial) std::cout << (c.format == "latex" ? to_latex(*r.polynomial) : to_text(*r.polynomial)) << '\n';
    if (r.scalar) std::cout << "value: " << *r.scalar << '\n';
    if (r.invariants)
        std::cout << "dimension: " << r.invariants->dimension << '\n'
                  << "components: " << to_string(r.invariants->components) << '\n'
                  << "euler: " << to_string(r.invariants->euler) << '\n';
    for (const auto& [k, v] : r.extra.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

Integer parse_q_value(const std::string& text) { return parse_integer(text); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Point counts of character stacks of surface groups over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--threads", common.threads, "Worker threads for the heavier engines")->check(CLI::Range(1u, 256u));

    long genus = 1;
    std::optional<std::string> eval_at;
    bool want_invariants = false;

    auto* gln_cmd = app.add_subcommand("gln", "GL_n counting polynomial from types");
    int n = 2;
    bool pgl_identity = false;
    gln_cmd->add_option("--n", n, "Matrix size")->required()->check(CLI::Range(1, 12));
    gln_cmd->add_option("--genus", genus, "Surface genus")->required()->check(CLI::PositiveNumber);
    gln_cmd->add_flag("--pgl-identity", pgl_identity, "Identity component of the PGL_n stack");
    gln_cmd->add_option("--eval", eval_at, "Evaluate at q");
    gln_cmd->add_flag("--invariants", want_invariants, "Degree, leading coefficient and value at 1");

    auto* table_cmd = app.add_subcommand("table", "Counting polynomial from a genus table");
    std::string table_file;
    std::optional<double> zeta_s;
    bool force_residue = false;
    table_cmd->add_option("--file", table_file, "Genus table file, or a shipped name such as g2")->required();
    table_cmd->add_option("--genus", genus, "Surface genus")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--eval", eval_at, "Evaluate at q");
    table_cmd->add_flag("--invariants", want_invariants, "Degree, leading coefficient and value at 1");
    table_cmd->add_option("--zeta", zeta_s, "Representation zeta function at s (needs --eval)");
    table_cmd->add_flag("--force-residue", force_residue, "Skip the residue check on q");

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force count over an enumerated matrix group");
    std::string kind = "gl";
    std::uint64_t q = 2;
    std::uint64_t cap = oracle::default_group_cap;
    oracle_cmd->add_option("--kind", kind, "Group family")->required()->check(CLI::IsMember({"gl", "sl", "pgl"}));
    oracle_cmd->add_option("--n", n, "Matrix size")->required()->check(CLI::Range(1, oracle::GroupTable::max_n));
    oracle_cmd->add_option("--q", q, "Field order")->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--genus", genus, "Surface genus")->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--cap", cap, "Largest group order to enumerate");

    auto* verify_cmd = app.add_subcommand("verify", "Compare the oracle with the polynomial engines");
    verify_cmd->add_option("--kind", kind, "Group family")->required()->check(CLI::IsMember({"gl", "pgl"}));
    verify_cmd->add_option("--n", n, "Matrix size")->required()->check(CLI::Range(1, oracle::GroupTable::max_n));
    verify_cmd->add_option("--q", q, "Field order")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--genus", genus, "Surface genus")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--cap", cap, "Largest group order to enumerate");

    auto* modulus_cmd = app.add_subcommand("modulus", "Modulus of a root datum");
    std::string datum;
    modulus_cmd->add_option("--datum", datum, "Datum file or one of sl2, sl3, sp4, g2, gl2, gl3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    Record rec;
    rec.command = join_args(argc, argv);
    const auto start = std::chrono::steady_clock::now();
    int status = exit_ok;
    try {
        if (*gln_cmd) {
            rec.polynomial = pgl_identity ? gln::count_polynomial_pgln_identity(n, genus, common.threads)
                                          : gln::count_polynomial_gln(n, genus, common.threads);
            if (eval_at) rec.scalar = to_string(rec.polynomial->eval(Rational(parse_q_value(*eval_at))));
            if (want_invariants) rec.invariants = invariants(*rec.polynomial);
        } else if (*table_cmd) {
            const GenusTable t = load_genus_table(resolve(table_file, "", ".genus"));
            rec.polynomial = count_polynomial_table(t, genus);
            rec.extra["group"] = t.name;
            if (zeta_s && !eval_at) throw CLI::ValidationError("--zeta", "requires --eval");
            if (eval_at) {
                const Integer qv = parse_q_value(*eval_at);
                Integer m = qv % t.modulus;
                if (m < 0) m += t.modulus;
                if (!force_residue && m != t.residue)
                    throw ResidueMismatch("q = " + *eval_at + " is not " + std::to_string(t.residue) + " mod " + std::to_string(t.modulus) +
                                          " (use --force-residue to evaluate anyway)");
                rec.scalar = to_string(rec.polynomial->eval(Rational(qv)));
                if (zeta_s) {
                    if (qv < 2) throw NotPrimePower(*eval_at + " is not a prime power");
                    rec.extra["zeta"] = format_double(zeta_table(t, qv.convert_to<std::uint64_t>(), *zeta_s, force_residue));
                }
            }
            if (want_invariants) rec.invariants = invariants(*rec.polynomial);
        } else if (*oracle_cmd || *verify_cmd) {
            const oracle::GroupTable g(oracle::parse_group_kind(kind), n, q, cap);
            const auto classes = oracle::conjugacy_classes(g);
            const auto nfun = oracle::commutator_class_function(g, classes, common.threads);
            const Rational count = oracle::groupoid_count(g, classes, nfun, genus, common.threads);
            rec.scalar = to_string(count);
            rec.extra["group_order"] = std::to_string(g.order());
            rec.extra["classes"] = classes.count();
            if (*verify_cmd) {
                Polynomial expected;
                if (kind == "gl") {
                    expected = gln::count_polynomial_gln(n, genus, common.threads);
                } else {
                    if (n != 2 && n != 3) throw DomainError("verify --kind pgl supports n = 2 and n = 3 (shipped tables)");
                    const GenusTable t = load_genus_table(resolve(n == 2 ? "pgl2" : "pgl3", "", ".genus"));
                    if (static_cast<long>(q % static_cast<std::uint64_t>(t.modulus)) != t.residue)
                        throw ResidueMismatch("q = " + std::to_string(q) + " is not " + std::to_string(t.residue) + " mod " + std::to_string(t.modulus));
                    expected = count_polynomial_table(t, genus);
                }
                const Rational predicted = expected.eval(Rational(Integer(q)));
                rec.polynomial = expected;
                rec.extra["expected"] = to_string(predicted);
                rec.extra["match"] = predicted == count;
                if (predicted != count) {
                    std::cerr << "mismatch: oracle " << to_string(count) << ", polynomial " << to_string(predicted) << '\n';
                    status = exit_mismatch;
                }
            }
        } else if (*modulus_cmd) {
            const bool builtin = rootdata::builtin_root_datum_text(datum) != nullptr;
            const rootdata::RootDatum d = builtin ? rootdata::builtin_root_datum(datum)
                                                  : rootdata::load_root_datum(resolve(datum, "rootdata", ".datum"));
            rec.scalar = to_string(Rational(rootdata::modulus(d)));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_computation;
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(rec, common);
    return status;
}
