#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "resolvedim/analysis.hpp"
#include "resolvedim/constructions.hpp"
#include "resolvedim/families.hpp"
#include "resolvedim/json_io.hpp"
#include "resolvedim/metric.hpp"
#include "resolvedim/sweep.hpp"

namespace rd = resolvedim;

namespace {

// exit codes: 0 success/verified, 1 negative verification,
// 2 input/budget error, 3 construction verification failure
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("RESOLVEDIM_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring unparsable RESOLVEDIM_BUDGET\n";
        }
    }
    return 10'000'000;
}

std::string join(const std::vector<int>& vs) {
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "]";
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

rd::ConstructionReport run_bound(const rd::Graph& g, const std::string& method,
                                 std::uint64_t budget) {
    if (method == "bipyramid")
        return rd::bipyramid_set_for(g);
    if (method == "maxplanar")
        return rd::maximal_planar_set(g);
    if (method == "hamiltonian") {
        auto cycle = rd::hamiltonian_cycle(g, {budget});
        if (!cycle)
            throw rd::Error(rd::ErrorCode::NotHamiltonianCycle, "graph has no hamiltonian cycle");
        return rd::hamiltonian_outerplanar_set(g, *cycle);
    }
    if (method == "outerplanar")
        return rd::outerplanar_set(g);
    if (method == "coloring") {
        rd::Coloring coloring;
        if (g.certificates().outer_cycle) {
            coloring = rd::color_outerplanar(g);
        } else {
            int k = 1;
            while (true) {
                rd::ColorResult res = rd::color_with(g, k, {budget});
                if (res.outcome == rd::ColorOutcome::Found) {
                    coloring = *res.coloring;
                    break;
                }
                ++k;
            }
        }
        return rd::coloring_bound_set(g, coloring);
    }
    if (method == "auto") {
        if (rd::is_bipyramid(g))
            return rd::bipyramid_set_for(g);
        if (g.certificates().faces)
            return rd::maximal_planar_set(g);
        if (g.certificates().outer_cycle) {
            try {
                auto cycle = rd::hamiltonian_cycle(g, {budget});
                if (cycle)
                    return rd::hamiltonian_outerplanar_set(g, *cycle);
            } catch (const rd::Error&) {
                // fall through to the general outerplanar route
            }
            return rd::outerplanar_set(g);
        }
        if (g.vertex_count() <= 12 && rd::is_outerplanar_small(g))
            return rd::outerplanar_set(g);
        return run_bound(g, "coloring", budget);
    }
    throw rd::Error(rd::ErrorCode::BadInput, "unknown method '" + method + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric dimension toolkit: exact solver, constructive bounds, generators"};
    app.require_subcommand(1);

    std::uint64_t budget = default_budget();
    app.add_option("--budget", budget, "search node budget (env RESOLVEDIM_BUDGET)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family member as graph JSON");
    std::string gen_family;
    int gen_n = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("family", gen_family, "family name")->required();
    gen->add_option("--n", gen_n, "size parameter")->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("-o,--output", gen_out, "output path")->required();

    // dim
    auto* dim = app.add_subcommand("dim", "exact metric dimension of a graph file");
    std::string dim_path;
    dim->add_option("graph", dim_path, "graph JSON path")->required();

    // bound
    auto* bound = app.add_subcommand("bound", "construct an upper-bound resolving set");
    std::string bound_path, bound_method = "auto";
    bound->add_option("graph", bound_path, "graph JSON path")->required();
    bound->add_option("--method", bound_method,
                      "hamiltonian|coloring|outerplanar|maxplanar|bipyramid|auto");

    // verify
    auto* verify = app.add_subcommand("verify", "check whether a vertex set resolves the graph");
    std::string verify_path;
    std::vector<int> verify_set;
    verify->add_option("graph", verify_path, "graph JSON path")->required();
    verify->add_option("--set", verify_set, "vertex indices")->expected(-1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "batch solve + bound across families, CSV output");
    std::vector<std::string> sweep_families;
    std::string sweep_range = "4..10", sweep_csv;
    std::uint64_t sweep_seed = 1;
    bool sweep_conjecture = false, sweep_timing = false;
    int sweep_exact_limit = 18;
    sweep->add_option("families", sweep_families, "family names");
    sweep->add_option("--n", sweep_range, "size range A..B");
    sweep->add_option("--seed", sweep_seed, "generator seed");
    sweep->add_option("--csv", sweep_csv, "output CSV path")->required();
    sweep->add_flag("--conjecture", sweep_conjecture,
                    "tabulate beta - floor(2 n_total/5) over the mixed triangulation corpus");
    sweep->add_flag("--timing", sweep_timing, "add a seconds column (breaks reproducibility)");
    sweep->add_option("--exact-limit", sweep_exact_limit, "skip exact solver above this size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*gen) {
            rd::FamilySpec spec{gen_family,
                                {{"n", gen_n}, {"seed", static_cast<std::int64_t>(gen_seed)}}};
            rd::Graph g = rd::generate(spec);
            rd::save_graph(g, gen_out);
            std::cout << "wrote " << gen_out << " (n=" << g.vertex_count()
                      << ", m=" << g.edge_count() << ")\n";
            return 0;
        }

        if (*dim) {
            rd::Graph g = rd::load_graph(dim_path);
            rd::AlikeBound lower = rd::alike_lower_bound(g);
            const auto start = std::chrono::steady_clock::now();
            try {
                rd::ExactResult res = rd::metric_dimension_exact(g, {budget});
                double secs =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
                std::cout << "beta=" << res.beta << " witness=" << join(res.witness.members)
                          << " lower_bound=" << lower.value << " seconds=" << secs << "\n";
                return 0;
            } catch (const rd::Error& e) {
                if (e.code() == rd::ErrorCode::BudgetExceeded) {
                    std::cout << "beta=? lower_bound=" << lower.value << " (budget exceeded)\n";
                    return kExitInput;
                }
                throw;
            }
        }

        if (*bound) {
            rd::Graph g = rd::load_graph(bound_path);
            try {
                rd::ConstructionReport rep = run_bound(g, bound_method, budget);
                std::cout << rd::report_to_json(rep).dump() << "\n";
                return 0;
            } catch (const rd::VerificationError& e) {
                std::cout << "{\"verified\":false,\"witness\":[" << e.witness().first << ","
                          << e.witness().second << "],\"error\":\"" << e.what() << "\"}\n";
                return kExitVerification;
            } catch (const rd::Error& e) {
                if (e.code() == rd::ErrorCode::VerificationFailed) {
                    std::cout << "{\"verified\":false,\"error\":\"" << e.what() << "\"}\n";
                    return kExitVerification;
                }
                throw;
            }
        }

        if (*verify) {
            rd::Graph g = rd::load_graph(verify_path);
            rd::VertexSet set = rd::VertexSet::of(verify_set, g.vertex_count());
            rd::DistanceMatrix d = rd::all_pairs_distances(g);
            rd::ResolveCheck check = rd::is_resolving_set(g, d, set);
            if (check.resolving) {
                std::cout << "true\n";
                return 0;
            }
            std::cout << "false witness=(" << check.witness.first << "," << check.witness.second
                      << ")\n";
            return kExitFalse;
        }

        if (*sweep) {
            rd::SweepOptions opts;
            opts.families = sweep_families;
            if (!parse_range(sweep_range, opts.n_min, opts.n_max))
                throw rd::Error(rd::ErrorCode::BadInput, "bad range '" + sweep_range + "'");
            opts.seed = sweep_seed;
            opts.conjecture = sweep_conjecture;
            opts.timing = sweep_timing;
            opts.solver_budget = budget;
            opts.exact_limit = sweep_exact_limit;
            if (!opts.conjecture && opts.families.empty())
                throw rd::Error(rd::ErrorCode::BadInput, "no families given (or use --conjecture)");
            std::vector<rd::SweepRow> rows = rd::run_sweep(opts);
            std::ofstream out(sweep_csv);
            if (!out)
                throw rd::Error(rd::ErrorCode::IoError, "cannot write " + sweep_csv);
            out << rd::sweep_to_csv(rows, opts);
            std::cout << "wrote " << sweep_csv << " (" << rows.size() << " rows)\n";
            return 0;
        }
    } catch (const rd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == rd::ErrorCode::VerificationFailed ? kExitVerification : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
