#include "resolvedim/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stack>

namespace resolvedim {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::BadCertificate: return "BadCertificate";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotHamiltonianCycle: return "NotHamiltonianCycle";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::NotOuterplanar: return "NotOuterplanar";
    case ErrorCode::NotMaximalPlanar: return "NotMaximalPlanar";
    case ErrorCode::ColoringNotFound: return "ColoringNotFound";
    case ErrorCode::RepairFailed: return "RepairFailed";
    case ErrorCode::MissingCertificate: return "MissingCertificate";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegeneracyViolated: return "DegeneracyViolated";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

Graph Graph::build(int n, std::vector<std::pair<int, int>> edges, Certificates certs) {
    if (n < 1)
        throw Error(ErrorCode::DomainError, "vertex count must be >= 1, got " + std::to_string(n));

    Graph g;
    g.n_ = n;
    g.adj_.resize(n);

    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v)
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::BadInput, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                 ") out of range for n=" + std::to_string(n));
        if (u > v)
            std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw Error(ErrorCode::DuplicateEdge,
                        "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_)
        std::sort(list.begin(), list.end());

    // connectivity
    std::vector<char> visited(n, 0);
    std::queue<int> q;
    q.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj_[u]) {
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    if (reached != n) {
        int missing = 0;
        while (visited[missing])
            ++missing;
        throw Error(ErrorCode::Disconnected,
                    "vertex " + std::to_string(missing) + " not reachable from vertex 0");
    }

    if (certs.outer_cycle) {
        const auto& cyc = *certs.outer_cycle;
        if (static_cast<int>(cyc.size()) != n)
            throw Error(ErrorCode::BadCertificate, "outer_cycle has " + std::to_string(cyc.size()) +
                                                       " entries, expected " + std::to_string(n));
        std::vector<char> mark(n, 0);
        for (int v : cyc) {
            if (v < 0 || v >= n || mark[v])
                throw Error(ErrorCode::BadCertificate,
                            "outer_cycle is not a permutation (vertex " + std::to_string(v) + ")");
            mark[v] = 1;
        }
        for (int i = 0; i < n; ++i) {
            int u = cyc[i], v = cyc[(i + 1) % n];
            if (n > 1 && !g.has_edge(u, v))
                throw Error(ErrorCode::BadCertificate, "outer_cycle step (" + std::to_string(u) +
                                                           "," + std::to_string(v) +
                                                           ") is not an edge");
        }
    }
    if (certs.faces) {
        for (const auto& f : *certs.faces) {
            for (int k = 0; k < 3; ++k) {
                int u = f[k], v = f[(k + 1) % 3];
                if (u < 0 || v < 0 || u >= n || v >= n || u == v || !g.has_edge(u, v))
                    throw Error(ErrorCode::BadCertificate,
                                "face (" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
                                    std::to_string(f[2]) + ") is not a triangle of edges");
            }
        }
    }
    g.certs_ = std::move(certs);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> d(static_cast<std::size_t>(n) * n, -1);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        int* row = d.data() + static_cast<std::size_t>(s) * n;
        int head = 0, tail = 0;
        row[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (int w : g.neighbors(u)) {
                if (row[w] < 0) {
                    row[w] = row[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
    }
    return DistanceMatrix(n, std::move(d));
}

namespace {

struct BccState {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<Block> blocks;
    int timer = 0;

    explicit BccState(const Graph& graph)
        : g(graph), num(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

    void pop_block(std::pair<int, int> until) {
        Block b;
        std::set<int> verts;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            int u = std::min(e.first, e.second);
            int v = std::max(e.first, e.second);
            b.edges.push_back({u, v});
            verts.insert(u);
            verts.insert(v);
            if (e == until)
                break;
        }
        b.vertices.assign(verts.begin(), verts.end());
        std::sort(b.edges.begin(), b.edges.end());
        blocks.push_back(std::move(b));
    }

    // iterative Hopcroft-Tarjan
    void run(int root) {
        struct Frame {
            int v, parent;
            std::size_t next_child = 0;
        };
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        num[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            int v = fr.v;
            const auto& nbrs = g.neighbors(v);
            if (fr.next_child < nbrs.size()) {
                int w = nbrs[fr.next_child++];
                if (w == fr.parent)
                    continue;
                if (num[w] == -1) {
                    edge_stack.push_back({v, w});
                    num[w] = low[w] = timer++;
                    stack.push_back({w, v});
                } else if (num[w] < num[v]) {
                    edge_stack.push_back({v, w});
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& up = stack.back();
                    low[up.v] = std::min(low[up.v], low[v]);
                    if (low[v] >= num[up.v])
                        pop_block({up.v, v});
                }
            }
        }
    }
};

} // namespace

BlockDecomposition biconnected_components(const Graph& g) {
    BccState st(g);
    st.run(0);

    BlockDecomposition out;
    out.blocks = std::move(st.blocks);
    // cut vertices are exactly the vertices shared by two or more blocks
    std::vector<int> containing(g.vertex_count(), 0);
    for (const auto& b : out.blocks)
        for (int v : b.vertices)
            ++containing[v];
    for (int v = 0; v < g.vertex_count(); ++v)
        if (containing[v] >= 2)
            out.cut_vertices.push_back(v);

    std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& a, const Block& b) {
        return a.vertices < b.vertices;
    });
    return out;
}

} // namespace resolvedim
