#ifndef RESOLVEDIM_ANALYSIS_HPP
#define RESOLVEDIM_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "resolvedim/graph.hpp"

namespace resolvedim {

struct Coloring {
    std::vector<int> colors; // vertex -> color, dense 0..num_colors-1
    int num_colors;
};

struct SearchBudget {
    std::uint64_t nodes = 10'000'000;
};

enum class ColorOutcome { Found, NoneExists };

struct ColorResult {
    ColorOutcome outcome;
    std::optional<Coloring> coloring;
    std::uint64_t nodes_visited;
};

/// Exact k-coloring by saturation-ordered backtracking. Distinguishes a
/// proved non-existence from a blown budget (BudgetExceeded).
ColorResult color_with(const Graph& g, int k, SearchBudget budget = {});

/// <= 3 colors via 2-degeneracy elimination; DegeneracyViolated when a
/// residual min degree >= 3 shows the input is not outerplanar.
Coloring color_outerplanar(const Graph& g);

/// Requires the outer_cycle certificate: true iff all chords are pairwise
/// noncrossing in the cyclic order.
bool is_outerplanar_certificate(const Graph& g);

/// Requires the faces certificate and n >= 4: checks m = 3n-6, face count
/// 2n-4, triangular faces, every edge in exactly two faces.
bool is_maximal_planar_certificate(const Graph& g);

struct BipyramidDecomposition {
    std::pair<int, int> apexes; // lexicographically smallest valid pair
    std::vector<int> rim;       // cyclic order, canonical start and direction
};

/// Two non-adjacent vertices adjacent to everything else, remainder inducing
/// a single cycle. None when no decomposition exists.
std::optional<BipyramidDecomposition> is_bipyramid(const Graph& g);

/// Outer-cycle certificate passthrough when valid, otherwise backtracking
/// search. Canonical form: starts at vertex 0, lexicographically smallest.
std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g, SearchBudget budget = {});

enum class MinorTarget { K4, K23 };

/// Brute-force topological-minor search (valid for targets of max degree 3).
/// Throws TooLarge above 12 vertices.
bool has_minor_small(const Graph& g, MinorTarget target);

/// Small-n outerplanarity fallback: neither a K4 nor a K23 minor.
bool is_outerplanar_small(const Graph& g);

} // namespace resolvedim

#endif
