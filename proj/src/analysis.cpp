#include "resolvedim/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace resolvedim {

namespace {

struct ColorSearch {
    const Graph& g;
    int n, k;
    std::uint64_t budget, nodes = 0;
    std::vector<int> colors;
    std::vector<std::vector<int>> adj_color_count; // [v][c]
    std::vector<int> saturation;

    ColorSearch(const Graph& graph, int kk, std::uint64_t b)
        : g(graph), n(graph.vertex_count()), k(kk), budget(b), colors(n, -1),
          adj_color_count(n, std::vector<int>(kk, 0)), saturation(n, 0) {}

    int pick() const {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (colors[v] >= 0)
                continue;
            if (best == -1 || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        return best;
    }

    void assign(int v, int c) {
        colors[v] = c;
        for (int w : g.neighbors(v))
            if (colors[w] < 0 && adj_color_count[w][c]++ == 0)
                ++saturation[w];
    }

    void unassign(int v, int c) {
        colors[v] = -1;
        for (int w : g.neighbors(v))
            if (colors[w] < 0 && --adj_color_count[w][c] == 0)
                --saturation[w];
    }

    bool solve(int colored, int max_used) {
        if (colored == n)
            return true;
        int v = pick();
        // trying one fresh color suffices; higher fresh colors are symmetric
        const int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            if (adj_color_count[v][c] > 0)
                continue;
            if (++nodes > budget)
                throw Error(ErrorCode::BudgetExceeded,
                            "coloring budget of " + std::to_string(budget) + " exhausted");
            assign(v, c);
            if (solve(colored + 1, std::max(max_used, c + 1)))
                return true;
            unassign(v, c);
        }
        return false;
    }
};

} // namespace

ColorResult color_with(const Graph& g, int k, SearchBudget budget) {
    if (k < 1)
        throw Error(ErrorCode::DomainError, "color count must be >= 1, got " + std::to_string(k));
    ColorSearch search(g, k, budget.nodes);
    if (!search.solve(0, 0))
        return {ColorOutcome::NoneExists, std::nullopt, search.nodes};
    int used = *std::max_element(search.colors.begin(), search.colors.end()) + 1;
    return {ColorOutcome::Found, Coloring{std::move(search.colors), used}, search.nodes};
}

Coloring color_outerplanar(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> degree(n), order;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        degree[v] = g.degree(v);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick == -1 || degree[v] < degree[pick]))
                pick = v;
        if (degree[pick] > 2)
            throw Error(ErrorCode::DegeneracyViolated,
                        "residual minimum degree " + std::to_string(degree[pick]) + " at vertex " +
                            std::to_string(pick) + "; graph is not 2-degenerate");
        removed[pick] = 1;
        order.push_back(pick);
        for (int w : g.neighbors(pick))
            if (!removed[w])
                --degree[w];
    }
    std::vector<int> colors(n, -1);
    int used = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        bool taken[3] = {false, false, false};
        for (int w : g.neighbors(v))
            if (colors[w] >= 0)
                taken[colors[w]] = true;
        int c = 0;
        while (taken[c])
            ++c;
        colors[v] = c;
        used = std::max(used, c + 1);
    }
    return {std::move(colors), used};
}

bool is_outerplanar_certificate(const Graph& g) {
    const auto& certs = g.certificates();
    if (!certs.outer_cycle)
        throw Error(ErrorCode::MissingCertificate, "outer_cycle certificate required");
    const int n = g.vertex_count();
    const auto& cyc = *certs.outer_cycle;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[cyc[i]] = i;

    std::vector<std::pair<int, int>> chords;
    for (auto [u, v] : g.edges()) {
        int a = pos[u], b = pos[v];
        if (a > b)
            std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == n - 1))
            continue; // cycle edge
        chords.push_back({a, b});
    }
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            if (a == c || a == d || b == c || b == d)
                continue; // chords sharing an endpoint never cross
            const bool c_inside = a < c && c < b;
            const bool d_inside = a < d && d < b;
            if (c_inside != d_inside)
                return false;
        }
    return true;
}

bool is_maximal_planar_certificate(const Graph& g) {
    const auto& certs = g.certificates();
    if (!certs.faces)
        throw Error(ErrorCode::MissingCertificate, "faces certificate required");
    const int n = g.vertex_count();
    if (n < 4)
        throw Error(ErrorCode::DomainError, "maximal planar certificate check requires n >= 4");
    const auto& faces = *certs.faces;
    if (g.edge_count() != 3 * n - 6)
        return false;
    if (static_cast<int>(faces.size()) != 2 * n - 4)
        return false;
    std::map<std::pair<int, int>, int> edge_face_count;
    for (const auto& f : faces) {
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
            return false;
        for (int k = 0; k < 3; ++k) {
            int u = f[k], v = f[(k + 1) % 3];
            if (!g.has_edge(u, v))
                return false;
            if (u > v)
                std::swap(u, v);
            ++edge_face_count[{u, v}];
        }
    }
    if (static_cast<int>(edge_face_count.size()) != g.edge_count())
        return false;
    for (const auto& [e, count] : edge_face_count)
        if (count != 2)
            return false;
    return true;
}

std::optional<BipyramidDecomposition> is_bipyramid(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 5)
        return std::nullopt;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != n - 2)
            continue;
        for (int v = u + 1; v < n; ++v) {
            if (g.degree(v) != n - 2 || g.has_edge(u, v))
                continue;
            // u,v adjacent to everything else; rim must induce one cycle
            std::vector<int> rim_next(n, -2);
            bool ok = true;
            for (int w = 0; w < n && ok; ++w) {
                if (w == u || w == v)
                    continue;
                std::vector<int> rim_nbrs;
                for (int x : g.neighbors(w))
                    if (x != u && x != v)
                        rim_nbrs.push_back(x);
                if (rim_nbrs.size() != 2)
                    ok = false;
            }
            if (!ok)
                continue;
            int start = 0;
            while (start == u || start == v)
                ++start;
            std::vector<int> rim;
            rim.reserve(n - 2);
            int prev = -1, cur = start;
            while (true) {
                rim.push_back(cur);
                std::vector<int> rim_nbrs;
                for (int x : g.neighbors(cur))
                    if (x != u && x != v)
                        rim_nbrs.push_back(x);
                int nxt;
                if (prev == -1)
                    nxt = std::min(rim_nbrs[0], rim_nbrs[1]);
                else
                    nxt = rim_nbrs[0] == prev ? rim_nbrs[1] : rim_nbrs[0];
                if (nxt == start)
                    break;
                prev = cur;
                cur = nxt;
                if (static_cast<int>(rim.size()) > n)
                    break; // defensive; cannot happen on 2-regular rims
            }
            if (static_cast<int>(rim.size()) == n - 2)
                return BipyramidDecomposition{{u, v}, std::move(rim)};
        }
    }
    return std::nullopt;
}

namespace {

std::vector<int> canonical_cycle(const std::vector<int>& cyc) {
    const int n = static_cast<int>(cyc.size());
    int at0 = 0;
    while (cyc[at0] != 0)
        ++at0;
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = cyc[(at0 + i) % n];
    if (n > 2 && out[n - 1] < out[1]) {
        std::reverse(out.begin() + 1, out.end());
    }
    return out;
}

struct HamSearch {
    const Graph& g;
    int n;
    std::uint64_t budget, nodes = 0;
    std::vector<int> path;
    std::vector<char> used;

    HamSearch(const Graph& graph, std::uint64_t b)
        : g(graph), n(graph.vertex_count()), budget(b), used(n, 0) {}

    bool extend() {
        if (++nodes > budget)
            throw Error(ErrorCode::BudgetExceeded,
                        "hamiltonian search budget of " + std::to_string(budget) + " exhausted");
        if (static_cast<int>(path.size()) == n)
            return g.has_edge(path.back(), path.front());
        int v = path.back();
        for (int w : g.neighbors(v)) {
            if (used[w])
                continue;
            used[w] = 1;
            path.push_back(w);
            if (extend())
                return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g, SearchBudget budget) {
    const int n = g.vertex_count();
    if (n < 3)
        return std::nullopt;
    if (g.certificates().outer_cycle)
        return canonical_cycle(*g.certificates().outer_cycle);
    HamSearch search(g, budget.nodes);
    search.path.push_back(0);
    search.used[0] = 1;
    if (!search.extend())
        return std::nullopt;
    return canonical_cycle(search.path);
}

namespace {

// Both K4 and K23 have maximum degree 3, so minor containment coincides with
// topological-minor containment: branch vertices plus internally disjoint paths.
struct SubdivisionSearch {
    const Graph& g;
    int n;
    std::vector<char> used; // reserved as path-internal or branch vertex

    explicit SubdivisionSearch(const Graph& graph) : g(graph), n(graph.vertex_count()), used(n, 0) {}

    bool connect(const std::vector<std::pair<int, int>>& pairs, std::size_t i) {
        if (i == pairs.size())
            return true;
        auto [s, t] = pairs[i];
        return path_dfs(s, t, pairs, i);
    }

    bool path_dfs(int cur, int t, const std::vector<std::pair<int, int>>& pairs, std::size_t i) {
        if (g.has_edge(cur, t) && connect(pairs, i + 1))
            return true;
        for (int w : g.neighbors(cur)) {
            if (used[w])
                continue;
            used[w] = 1;
            if (path_dfs(w, t, pairs, i))
                return true;
            used[w] = 0;
        }
        return false;
    }

    bool try_branches(const std::vector<int>& branch, const std::vector<std::pair<int, int>>& pairs) {
        std::fill(used.begin(), used.end(), 0);
        for (int b : branch)
            used[b] = 1;
        return connect(pairs, 0);
    }
};

} // namespace

bool has_minor_small(const Graph& g, MinorTarget target) {
    const int n = g.vertex_count();
    if (n > 12)
        throw Error(ErrorCode::TooLarge, "minor search limited to n <= 12, got " + std::to_string(n));

    if (target == MinorTarget::K4) {
        if (n < 4 || g.edge_count() < 6)
            return false;
        // subgraph shortcut
        for (auto [u, v] : g.edges())
            for (int w = v + 1; w < n; ++w)
                if (g.has_edge(u, w) && g.has_edge(v, w))
                    for (int x = w + 1; x < n; ++x)
                        if (g.has_edge(u, x) && g.has_edge(v, x) && g.has_edge(w, x))
                            return true;
        SubdivisionSearch search(g);
        std::vector<int> cand;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= 3)
                cand.push_back(v);
        const int m = static_cast<int>(cand.size());
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c)
                    for (int d = c + 1; d < m; ++d) {
                        std::vector<int> branch{cand[a], cand[b], cand[c], cand[d]};
                        std::vector<std::pair<int, int>> pairs;
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j)
                                pairs.push_back({branch[i], branch[j]});
                        if (search.try_branches(branch, pairs))
                            return true;
                    }
        return false;
    }

    // K23
    if (n < 5 || g.edge_count() < 6)
        return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int w : g.neighbors(u))
                if (w != v && g.has_edge(v, w))
                    ++common;
            if (common >= 3)
                return true;
        }
    SubdivisionSearch search(g);
    std::vector<int> left_cand, right_cand;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) >= 3)
            left_cand.push_back(v);
        if (g.degree(v) >= 2)
            right_cand.push_back(v);
    }
    for (std::size_t i = 0; i < left_cand.size(); ++i)
        for (std::size_t j = i + 1; j < left_cand.size(); ++j) {
            int a = left_cand[i], b = left_cand[j];
            std::vector<int> rights;
            for (int v : right_cand)
                if (v != a && v != b)
                    rights.push_back(v);
            const int m = static_cast<int>(rights.size());
            for (int p = 0; p < m; ++p)
                for (int q = p + 1; q < m; ++q)
                    for (int r = q + 1; r < m; ++r) {
                        std::vector<int> branch{a, b, rights[p], rights[q], rights[r]};
                        std::vector<std::pair<int, int>> pairs;
                        for (int side : {a, b})
                            for (int x : {rights[p], rights[q], rights[r]})
                                pairs.push_back({side, x});
                        if (search.try_branches(branch, pairs))
                            return true;
                    }
        }
    return false;
}

bool is_outerplanar_small(const Graph& g) {
    return !has_minor_small(g, MinorTarget::K4) && !has_minor_small(g, MinorTarget::K23);
}

} // namespace resolvedim
