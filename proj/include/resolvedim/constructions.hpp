#ifndef RESOLVEDIM_CONSTRUCTIONS_HPP
#define RESOLVEDIM_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "resolvedim/analysis.hpp"
#include "resolvedim/graph.hpp"
#include "resolvedim/metric.hpp"

namespace resolvedim {

enum class Method {
    HamiltonianOuterplanar,
    Coloring,
    Outerplanar,
    MaximalPlanar,
    Bipyramid,
};

const char* method_name(Method m);

/// Every construction verifies its set with is_resolving_set before
/// returning; a set that cannot verify raises VerificationError instead of
/// being returned.
struct ConstructionReport {
    Method method;
    VertexSet set;
    int bound;     // the cited theorem's ceiling for this graph
    bool verified; // always true on a returned report
    std::string notes;
};

/// Odd positions (1-based) along a Hamiltonian cycle; |set| = ceil(n/2).
/// The caller asserts outerplanarity. Throws NotHamiltonianCycle,
/// VerificationFailed (known to trigger on the n=4 diamond and C_4).
ConstructionReport hamiltonian_outerplanar_set(const Graph& g, const std::vector<int>& cycle_order);

/// Everything outside the most frequent color, plus all but one member per
/// alike class inside it. Bound: floor((chi-1)/chi * n) + (n - s).
ConstructionReport coloring_bound_set(const Graph& g, const Coloring& coloring);

/// Block decomposition, temporary-edge repair of C_4 and diamond blocks,
/// 3-coloring, color selection, verification on the original graph.
/// Bound: floor(2n/3).
ConstructionReport outerplanar_set(const Graph& g);

/// Bipyramid routing or 4-coloring selection; bound floor(3n/4).
ConstructionReport maximal_planar_set(const Graph& g);

/// The b_1, b_5k, b_5k+2, b_n pattern plus one apex on the canonical
/// bipyramid, with deterministic repair toward size floor(2n/5)+1. When no
/// set of that size resolves (exhaustively established), the smallest
/// verified size is returned and the deviation is recorded in notes.
ConstructionReport bipyramid_set(int cycle_size);

/// Recognizes the graph as a bipyramid and maps the canonical selection onto
/// its labels, verifying on the given graph. DomainError when it is not one.
ConstructionReport bipyramid_set_for(const Graph& g);

/// The paper's closed form floor(2n/5) + 1; DomainError for n < 5.
int bipyramid_dimension(int cycle_size);

} // namespace resolvedim

#endif
