#ifndef RESOLVEDIM_GRAPH_HPP
#define RESOLVEDIM_GRAPH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resolvedim/errors.hpp"

namespace resolvedim {

struct FamilyTag {
    std::string name;
    std::map<std::string, std::int64_t> params;
};

struct Certificates {
    std::optional<std::vector<int>> outer_cycle;
    std::optional<std::vector<std::array<int, 3>>> faces;
    std::optional<FamilyTag> family;

    bool empty() const { return !outer_cycle && !faces && !family; }
};

/// Immutable simple connected graph on vertices 0..n-1.
class Graph {
public:
    /// Validates and normalizes the edge list. Throws SelfLoop, DuplicateEdge,
    /// BadInput (endpoint out of range), Disconnected, BadCertificate.
    static Graph build(int n, std::vector<std::pair<int, int>> edges, Certificates certs = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    const Certificates& certificates() const { return certs_; }

private:
    Graph() = default;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_; // sorted, u < v
    std::vector<std::vector<int>> adj_;      // sorted neighbor lists
    Certificates certs_;
};

/// All-pairs hop distances, dense n x n.
class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<int> data) : n_(n), d_(std::move(data)) {}

    int size() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    const int* row(int u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }

private:
    int n_;
    std::vector<int> d_;
};

/// BFS from every vertex. Connectivity is guaranteed by the Graph type.
DistanceMatrix all_pairs_distances(const Graph& g);

struct Block {
    std::vector<int> vertices;               // sorted
    std::vector<std::pair<int, int>> edges;  // sorted, u < v
};

struct BlockDecomposition {
    std::vector<Block> blocks;      // ordered by smallest vertex, then lexicographic
    std::vector<int> cut_vertices;  // sorted
};

/// Standard block-cut decomposition; every edge lands in exactly one block.
BlockDecomposition biconnected_components(const Graph& g);

} // namespace resolvedim

#endif
