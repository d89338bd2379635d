// Command-line front end: analyze a graph, build the two realization
// constructions, verify them (single instance or seeded sweep), sweep all
// small isomorphism classes, and convert between formats.
//
// Exit codes: 0 success, 1 a verification verdict failed, 2 usage or input
// errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "raag/census.hpp"
#include "raag/dot.hpp"
#include "raag/io.hpp"
#include "raag/raag.hpp"
#include "raag/serialize.hpp"

namespace {

struct InputSpec {
    std::string g6;
    std::string path;
    int preset = 0;
    CLI::Option* og6 = nullptr;
    CLI::Option* opath = nullptr;
    CLI::Option* oapp = nullptr;
};

CLI::Option_group* add_input(CLI::App* cmd, InputSpec& in, const char* what) {
    auto* grp = cmd->add_option_group("input", std::string("the ") + what);
    in.og6 = grp->add_option("--g6", in.g6, "graph6 string");
    in.opath = grp->add_option("-i,--input", in.path, "edge-list or graph6 file, '-' for stdin");
    in.oapp = grp->add_option("--preset", in.preset, "fixed small-target graph (1, 2 or 3)")
                  ->check(CLI::Range(1, 3));
    return grp;
}

std::string read_file(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw raag::error("cannot read '" + path + "'");
        ss << f.rdbuf();
    }
    return ss.str();
}

raag::Graph load(const InputSpec& in) {
    if (in.oapp->count()) return raag::preset_graph(in.preset);
    if (in.og6->count()) return raag::parse_graph6(in.g6);
    return raag::parse_any(read_file(in.path));
}

raag::ConstructionKind parse_target(const std::string& s) {
    return s == "gamma" ? raag::ConstructionKind::gamma : raag::ConstructionKind::gamma_prime;
}

void print_json(const raag::json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

std::string render(const raag::Graph& g, const std::string& format, bool ranks) {
    if (format == "graph6") return raag::write_graph6(g) + "\n";
    if (format == "edge-list") return raag::write_edge_list(g);
    if (format == "dot") return raag::write_dot(g, ranks);
    return raag::to_json(g).dump() + "\n";
}

std::uint64_t seed_from_env() {
    const char* env = std::getenv("RAAG_OUT_SEED");
    if (!env) return raag::kDefaultSeed;
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(env, &used);
        if (env[used] != '\0') throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw raag::error(std::string("RAAG_OUT_SEED is not an integer: '") + env + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pure symmetric outer automorphism toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    // --- analyze ---
    auto* cmd_an = app.add_subcommand("analyze", "full report on one graph");
    InputSpec in_an;
    add_input(cmd_an, in_an, "graph to analyze")->require_option(1);
    bool an_pretty = false;
    cmd_an->add_flag("--pretty", an_pretty, "indent the JSON output");
    cmd_an->callback([&] {
        print_json(raag::to_json(raag::analyze(load(in_an))), an_pretty);
    });

    // --- construct ---
    auto* cmd_co = app.add_subcommand("construct", "build the realization of a defining graph");
    InputSpec in_co;
    add_input(cmd_co, in_co, "defining graph")->require_option(1);
    std::string co_target = "gamma-prime";
    cmd_co->add_option("--target", co_target, "construction to use (small graphs dispatch to the fixed answers)")
        ->check(CLI::IsMember({"gamma", "gamma-prime"}));
    std::string co_format = "graph6";
    cmd_co->add_option("--format", co_format, "output format")
        ->check(CLI::IsMember({"graph6", "edge-list", "json"}));
    cmd_co->callback([&] {
        auto [gamma, kind] = raag::build_for(load(in_co), parse_target(co_target));
        std::cerr << "construction: " << raag::to_string(kind) << " (" << gamma.vertex_count()
                  << " vertices, " << gamma.edge_count() << " edges)\n";
        std::cout << render(gamma, co_format, false);
    });

    // --- verify ---
    auto* cmd_ve = app.add_subcommand(
        "verify", "certify the construction theorems on one instance or a seeded sweep");
    InputSpec in_ve;
    add_input(cmd_ve, in_ve, "defining graph (instance mode)");
    std::string ve_target = "gamma-prime";
    cmd_ve->add_option("--target", ve_target, "construction to verify")
        ->check(CLI::IsMember({"gamma", "gamma-prime"}));
    std::string ve_gamma_file;
    auto* o_gf = cmd_ve->add_option("--gamma-file", ve_gamma_file,
                                    "verify this graph instead of building one");
    std::size_t ve_samples = 0;
    auto* o_samples =
        cmd_ve->add_option("--samples", ve_samples, "sweep mode: number of random defining graphs");
    std::size_t ve_nmin = 3, ve_nmax = 8;
    cmd_ve->add_option("--nmin", ve_nmin, "sweep: smallest defining-graph size");
    cmd_ve->add_option("--nmax", ve_nmax, "sweep: largest defining-graph size");
    std::uint64_t ve_seed = 0;
    auto* o_seed = cmd_ve->add_option(
        "--seed", ve_seed, "sweep seed (default 20250823, or the RAAG_OUT_SEED variable)");
    bool ve_pretty = false;
    cmd_ve->add_flag("--pretty", ve_pretty, "indent the JSON output");
    cmd_ve->callback([&] {
        bool have_input = in_ve.og6->count() || in_ve.opath->count() || in_ve.oapp->count();
        if (o_samples->count()) {
            if (have_input || o_gf->count())
                throw raag::error("verify: --samples is a sweep over random graphs; "
                                  "drop the input options");
            std::uint64_t seed = o_seed->count() ? ve_seed : seed_from_env();
            auto sweep = raag::run_sample_sweep(seed, ve_samples, ve_nmin, ve_nmax,
                                                parse_target(ve_target));
            print_json(raag::to_json(sweep), ve_pretty);
            rc = sweep.passed == sweep.results.size() ? 0 : 1;
            return;
        }
        if (!have_input)
            throw raag::error("verify: give a defining graph (--g6/--input/--preset) "
                              "or --samples N");
        raag::Graph lambda = load(in_ve);
        raag::ConstructionKind kind = parse_target(ve_target);
        raag::Graph gamma;
        if (o_gf->count()) {
            gamma = raag::parse_any(read_file(ve_gamma_file));
        } else {
            auto built = raag::build_for(lambda, kind);
            gamma = std::move(built.first);
            kind = built.second;
        }
        auto r = raag::verify_construction(lambda, gamma,
                                           kind != raag::ConstructionKind::gamma);
        r.kind = kind;
        print_json(raag::to_json(r), ve_pretty);
        rc = r.passed() ? 0 : 1;
    });

    // --- census ---
    auto* cmd_ce = app.add_subcommand("census", "classify every isomorphism class of size n");
    int ce_n = 0;
    cmd_ce->add_option("-n,--size", ce_n, "number of vertices (1..7)")
        ->required()
        ->check(CLI::Range(1, 7));
    std::string ce_out;
    auto* o_out = cmd_ce->add_option("-o,--output", ce_out, "write the entries here as JSON lines");
    bool ce_cov = false;
    cmd_ce->add_flag("--coverage", ce_cov,
                     "also certify that every class up to n vertices is realized (n <= 4)");
    cmd_ce->callback([&] {
        auto entries = raag::classify(ce_n);
        std::size_t raag_count = 0, finite_count = 0;
        std::string lines;
        for (const auto& e : entries) {
            raag_count += e.pso_is_raag;
            finite_count += e.finite_index;
            lines += raag::to_json(e).dump() + "\n";
        }
        raag::json summary{{"n", ce_n},
                           {"classes", entries.size()},
                           {"pso_is_raag", raag_count},
                           {"finite_index", finite_count}};
        bool all_ok = true;
        if (ce_cov) {
            auto cov = raag::coverage_check(ce_n);
            all_ok = cov.all_verified;
            summary["coverage"] = raag::to_json(cov);
        }
        if (o_out->count()) {
            std::ofstream f(ce_out, std::ios::binary);
            if (!f) throw raag::error("cannot write '" + ce_out + "'");
            f << lines;
            std::cout << summary.dump() << "\n";
        } else {
            std::cout << lines;
            std::cerr << "classes on " << ce_n << " vertices: " << entries.size()
                      << " (pso is a raag: " << raag_count << ", finite index: " << finite_count
                      << ")\n";
            if (ce_cov)
                std::cerr << (all_ok ? "coverage: every class realized\n"
                                     : "coverage: FAILURES, see the summary\n");
        }
        rc = all_ok ? 0 : 1;
    });

    // --- export ---
    auto* cmd_ex = app.add_subcommand("export", "convert a graph between formats");
    InputSpec in_ex;
    add_input(cmd_ex, in_ex, "graph to convert")->require_option(1);
    std::string ex_format = "dot";
    cmd_ex->add_option("--format", ex_format, "output format")
        ->check(CLI::IsMember({"dot", "graph6", "edge-list", "json"}));
    bool ex_ranks = false;
    cmd_ex->add_flag("--ranks", ex_ranks, "dot only: group construction families on ranks");
    cmd_ex->callback([&] { std::cout << render(load(in_ex), ex_format, ex_ranks); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const raag::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
