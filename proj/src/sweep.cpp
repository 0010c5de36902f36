#include "resolvedim/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <utility>

#include "resolvedim/analysis.hpp"
#include "resolvedim/constructions.hpp"
#include "resolvedim/families.hpp"
#include "resolvedim/metric.hpp"

namespace resolvedim {

namespace {

std::string params_text(const Graph& g) {
    if (!g.certificates().family)
        return "";
    std::string out;
    for (const auto& [k, v] : g.certificates().family->params) {
        if (!out.empty())
            out += ";";
        out += k + "=" + std::to_string(v);
    }
    return out;
}

std::string family_of(const Graph& g) {
    return g.certificates().family ? g.certificates().family->name : "custom";
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SweepRow base_row(const Graph& g) {
    SweepRow row;
    row.family = family_of(g);
    row.params = params_text(g);
    row.n_total = g.vertex_count();
    return row;
}

std::optional<int> solve_exact(const Graph& g, const SweepOptions& opts) {
    if (g.vertex_count() > opts.exact_limit)
        return std::nullopt;
    try {
        return metric_dimension_exact(g, {opts.solver_budget}).beta;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BudgetExceeded)
            return std::nullopt;
        throw;
    }
}

SweepRow construction_row(const Graph& g, const SweepOptions& opts, const std::string& method,
                          std::optional<int> beta) {
    SweepRow row = base_row(g);
    row.beta_exact = beta;
    row.method = method;
    const auto start = std::chrono::steady_clock::now();
    try {
        ConstructionReport rep;
        if (method == "hamiltonian") {
            auto cycle = hamiltonian_cycle(g);
            if (!cycle)
                throw Error(ErrorCode::NotHamiltonianCycle, "no hamiltonian cycle");
            rep = hamiltonian_outerplanar_set(g, *cycle);
        } else if (method == "outerplanar") {
            rep = outerplanar_set(g);
        } else if (method == "maxplanar") {
            rep = maximal_planar_set(g);
        } else { // coloring
            Coloring coloring;
            if (g.certificates().outer_cycle) {
                coloring = color_outerplanar(g);
            } else {
                int k = 1;
                while (true) {
                    ColorResult res = color_with(g, k, {opts.solver_budget});
                    if (res.outcome == ColorOutcome::Found) {
                        coloring = *res.coloring;
                        break;
                    }
                    ++k;
                }
            }
            rep = coloring_bound_set(g, coloring);
        }
        row.method = method_name(rep.method);
        row.bound_size = rep.set.size();
        row.bound_formula = rep.bound;
        row.verified = rep.verified;
    } catch (const Error& e) {
        row.error = error_code_name(e.code());
        row.verified = false;
    }
    row.seconds = elapsed_seconds(start);
    if (opts.conjecture && row.beta_exact)
        row.beta_minus_2n5 = *row.beta_exact - 2 * row.n_total / 5;
    return row;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepOptions& opts) {
    std::vector<SweepRow> rows;

    if (opts.conjecture) {
        const std::vector<Graph> corpus = conjecture_corpus(opts.n_max, opts.seed);
        for (const Graph& g : corpus) {
            std::optional<int> beta = solve_exact(g, opts);
            rows.push_back(construction_row(g, opts, "maxplanar", beta));
        }
        return rows;
    }

    for (const std::string& family : opts.families) {
        for (int n = opts.n_min; n <= opts.n_max; ++n) {
            FamilySpec spec{family, {{"n", n}, {"seed", static_cast<std::int64_t>(opts.seed)}}};
            std::optional<Graph> maybe;
            try {
                maybe = generate(spec);
            } catch (const Error& e) {
                SweepRow row;
                row.family = family;
                row.params = "n=" + std::to_string(n);
                row.n_total = 0;
                row.error = error_code_name(e.code());
                rows.push_back(std::move(row));
                continue;
            }
            const Graph& g = *maybe;
            std::optional<int> beta = solve_exact(g, opts);

            std::vector<std::string> methods;
            if (g.certificates().faces)
                methods.push_back("maxplanar");
            if (g.certificates().outer_cycle) {
                methods.push_back("hamiltonian");
                methods.push_back("outerplanar");
            } else if (g.vertex_count() <= 12 && is_outerplanar_small(g)) {
                methods.push_back("outerplanar");
            }
            methods.push_back("coloring");

            for (const std::string& m : methods)
                rows.push_back(construction_row(g, opts, m, beta));
        }
    }
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, const SweepOptions& opts) {
    std::string out = "family,params,n_total,beta_exact,method,bound_size,bound_formula,verified";
    if (opts.conjecture)
        out += ",beta_minus_2n5";
    if (opts.timing)
        out += ",seconds";
    out += "\n";
    char buf[64];
    for (const SweepRow& row : rows) {
        out += row.family + "," + row.params + "," + std::to_string(row.n_total) + ",";
        if (row.beta_exact)
            out += std::to_string(*row.beta_exact);
        out += "," + (row.error.empty() ? row.method : row.method + ":" + row.error) + "," +
               std::to_string(row.bound_size) + "," + std::to_string(row.bound_formula) + "," +
               (row.verified ? "true" : "false");
        if (opts.conjecture) {
            out += ",";
            if (row.beta_minus_2n5)
                out += std::to_string(*row.beta_minus_2n5);
        }
        if (opts.timing) {
            std::snprintf(buf, sizeof buf, ",%.3f", row.seconds);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

} // namespace resolvedim
