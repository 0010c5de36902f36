#ifndef RESOLVEDIM_METRIC_HPP
#define RESOLVEDIM_METRIC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "resolvedim/graph.hpp"

namespace resolvedim {

/// Sorted, deduplicated set of vertex indices.
struct VertexSet {
    std::vector<int> members;

    static VertexSet of(std::vector<int> vertices, int n);

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int v) const;
};

/// Equivalence classes of vertices under equal open neighborhoods.
struct AlikePartition {
    std::vector<std::vector<int>> classes; // each sorted, ordered by smallest member
    std::vector<int> class_of;             // vertex -> class index

    int class_count() const { return static_cast<int>(classes.size()); } // s
};

AlikePartition alike_partition(const Graph& g);

/// The n - s lower bound plus per-class forcing data: any resolving set
/// contains at least size-1 members of every alike class.
struct AlikeBound {
    int value;        // n - s
    int forced_total; // sum over classes of (size - 1); equals value
    AlikePartition partition;
};

AlikeBound alike_lower_bound(const Graph& g);

struct ResolveCheck {
    bool resolving;
    std::pair<int, int> witness; // one unresolved pair when !resolving, else (-1,-1)
};

/// True iff distance vectors to the set members are pairwise distinct.
ResolveCheck is_resolving_set(const Graph& g, const DistanceMatrix& d, const VertexSet& set);

/// Vertices whose distance vector to the set is unique; the set is resolving
/// iff every vertex is returned.
std::vector<int> resolved_vertices(const Graph& g, const DistanceMatrix& d, const VertexSet& set);

struct SolverOptions {
    std::uint64_t node_budget = 10'000'000;
};

struct ExactResult {
    int beta;
    VertexSet witness; // lexicographically smallest minimum resolving set
    std::uint64_t nodes_visited;
};

/// Exact metric dimension by pair-cover branch and bound over subset sizes
/// k = max(1, n-s), n-s+1, ... with alike-class forcing as pruning.
ExactResult metric_dimension_exact(const Graph& g, SolverOptions opts = {});

/// Plain all-subsets oracle (increasing size, lexicographic), checked with
/// distance-vector comparison. Kept as an independent route for tests.
ExactResult metric_dimension_bruteforce(const Graph& g, SolverOptions opts = {});

} // namespace resolvedim

#endif
