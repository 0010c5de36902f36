#ifndef RESOLVEDIM_SWEEP_HPP
#define RESOLVEDIM_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resolvedim/graph.hpp"

namespace resolvedim {

struct SweepOptions {
    std::vector<std::string> families;
    int n_min = 4;
    int n_max = 10;
    std::uint64_t seed = 1;
    bool conjecture = false; // tabulate beta - floor(2*n_total/5) over the corpus
    bool timing = false;     // adds a wall-clock column; off keeps CSV reproducible
    std::uint64_t solver_budget = 10'000'000;
    int exact_limit = 18; // skip the exact solver above this many vertices
};

struct SweepRow {
    std::string family;
    std::string params; // "n=5;seed=42" style, no commas
    int n_total = 0;
    std::optional<int> beta_exact;
    std::string method;
    int bound_size = 0;
    int bound_formula = 0;
    bool verified = false;
    std::optional<int> beta_minus_2n5;
    double seconds = 0.0;
    std::string error; // non-empty marks an error row
};

std::vector<SweepRow> run_sweep(const SweepOptions& opts);

std::string sweep_to_csv(const std::vector<SweepRow>& rows, const SweepOptions& opts);

} // namespace resolvedim

#endif
