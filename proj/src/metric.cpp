#include "resolvedim/metric.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace resolvedim {

VertexSet VertexSet::of(std::vector<int> vertices, int n) {
    for (int v : vertices)
        if (v < 0 || v >= n)
            throw Error(ErrorCode::BadInput,
                        "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return VertexSet{std::move(vertices)};
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

AlikePartition alike_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < n; ++v)
        groups[g.neighbors(v)].push_back(v);

    AlikePartition part;
    part.classes.reserve(groups.size());
    for (auto& [nbrs, members] : groups)
        part.classes.push_back(std::move(members));
    std::sort(part.classes.begin(), part.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    part.class_of.assign(n, -1);
    for (int c = 0; c < static_cast<int>(part.classes.size()); ++c)
        for (int v : part.classes[c])
            part.class_of[v] = c;
    return part;
}

AlikeBound alike_lower_bound(const Graph& g) {
    AlikeBound out;
    out.partition = alike_partition(g);
    const int n = g.vertex_count();
    const int s = out.partition.class_count();
    out.value = n - s;
    out.forced_total = 0;
    for (const auto& cls : out.partition.classes)
        out.forced_total += static_cast<int>(cls.size()) - 1;
    return out;
}

ResolveCheck is_resolving_set(const Graph& g, const DistanceMatrix& d, const VertexSet& set) {
    const int n = g.vertex_count();
    std::vector<std::pair<std::vector<int>, int>> vecs;
    vecs.reserve(n);
    for (int u = 0; u < n; ++u) {
        std::vector<int> vec;
        vec.reserve(set.members.size());
        for (int w : set.members)
            vec.push_back(d.at(u, w));
        vecs.push_back({std::move(vec), u});
    }
    std::sort(vecs.begin(), vecs.end());
    std::pair<int, int> best{-1, -1};
    for (int i = 0; i + 1 < n; ++i) {
        if (vecs[i].first == vecs[i + 1].first) {
            int a = std::min(vecs[i].second, vecs[i + 1].second);
            int b = std::max(vecs[i].second, vecs[i + 1].second);
            if (best.first == -1 || std::pair{a, b} < best)
                best = {a, b};
        }
    }
    if (best.first != -1)
        return {false, best};
    return {true, {-1, -1}};
}

std::vector<int> resolved_vertices(const Graph& g, const DistanceMatrix& d, const VertexSet& set) {
    const int n = g.vertex_count();
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int u = 0; u < n; ++u) {
        std::vector<int> vec;
        vec.reserve(set.members.size());
        for (int w : set.members)
            vec.push_back(d.at(u, w));
        groups[std::move(vec)].push_back(u);
    }
    std::vector<int> out;
    for (const auto& [vec, members] : groups)
        if (members.size() == 1)
            out.push_back(members.front());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

constexpr int pair_index(int u, int v, int n) {
    // u < v
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

struct CoverSolver {
    int n, words, num_pairs;
    std::uint64_t budget, nodes = 0;
    std::vector<std::vector<std::uint64_t>> cover;     // per-vertex pair mask
    std::vector<std::vector<std::uint64_t>> suffix_or; // union of covers for v >= p
    std::vector<std::uint64_t> full;
    AlikePartition part;
    std::vector<int> class_need;  // per class, t-1 minus chosen so far
    std::vector<std::vector<int>> class_avail; // [class][pos] = members with index >= pos
    int need_total = 0;
    std::vector<int> chosen;
    int target = 0;

    CoverSolver(const Graph& g, const DistanceMatrix& d, std::uint64_t node_budget)
        : n(g.vertex_count()), budget(node_budget) {
        num_pairs = n * (n - 1) / 2;
        words = std::max(1, (num_pairs + 63) / 64);
        cover.assign(n, std::vector<std::uint64_t>(words, 0));
        for (int w = 0; w < n; ++w)
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (d.at(w, u) != d.at(w, v)) {
                        int idx = pair_index(u, v, n);
                        cover[w][idx >> 6] |= std::uint64_t{1} << (idx & 63);
                    }
        full.assign(words, 0);
        for (int idx = 0; idx < num_pairs; ++idx)
            full[idx >> 6] |= std::uint64_t{1} << (idx & 63);

        suffix_or.assign(n + 1, std::vector<std::uint64_t>(words, 0));
        for (int p = n - 1; p >= 0; --p)
            for (int w = 0; w < words; ++w)
                suffix_or[p][w] = suffix_or[p + 1][w] | cover[p][w];

        part = alike_partition(g);
        const int s = part.class_count();
        class_need.resize(s);
        class_avail.assign(s, std::vector<int>(n + 1, 0));
        for (int c = 0; c < s; ++c) {
            class_need[c] = static_cast<int>(part.classes[c].size()) - 1;
            need_total += class_need[c];
            for (int p = n - 1; p >= 0; --p) {
                class_avail[c][p] = class_avail[c][p + 1];
                if (part.class_of[p] == c)
                    ++class_avail[c][p];
            }
        }
    }

    bool covered_full(const std::vector<std::uint64_t>& covered) const {
        for (int w = 0; w < words; ++w)
            if (covered[w] != full[w])
                return false;
        return true;
    }

    bool search(int pos, std::vector<std::uint64_t>& covered) {
        if (++nodes > budget)
            throw Error(ErrorCode::BudgetExceeded,
                        "solver node budget of " + std::to_string(budget) + " exhausted");
        const int r = target - static_cast<int>(chosen.size());
        if (r == 0)
            return false;
        if (need_total > r)
            return false;
        // every still-uncovered pair must be coverable by some remaining vertex
        for (int w = 0; w < words; ++w)
            if ((full[w] & ~covered[w] & ~suffix_or[pos][w]) != 0)
                return false;
        // each class must still be able to reach its quota
        for (int c = 0; c < part.class_count(); ++c)
            if (class_need[c] > class_avail[c][pos])
                return false;

        for (int v = pos; v <= n - r; ++v) {
            chosen.push_back(v);
            const int cls = part.class_of[v];
            const bool counted = class_need[cls] > 0;
            if (counted) {
                --class_need[cls];
                --need_total;
            }
            bool done = true;
            for (int w = 0; w < words; ++w)
                if ((covered[w] | cover[v][w]) != full[w]) {
                    done = false;
                    break;
                }
            if (done)
                return true;
            std::vector<std::uint64_t> next(words);
            for (int w = 0; w < words; ++w)
                next[w] = covered[w] | cover[v][w];
            if (static_cast<int>(chosen.size()) < target && search(v + 1, next))
                return true;
            if (counted) {
                ++class_need[cls];
                ++need_total;
            }
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

ExactResult metric_dimension_exact(const Graph& g, SolverOptions opts) {
    const int n = g.vertex_count();
    if (n == 1)
        return {0, VertexSet{}, 0};

    const DistanceMatrix d = all_pairs_distances(g);
    CoverSolver solver(g, d, opts.node_budget);
    const int lower = std::max(1, n - solver.part.class_count());
    for (int k = lower; k <= n; ++k) {
        solver.target = k;
        std::vector<std::uint64_t> covered(solver.words, 0);
        if (solver.search(0, covered)) {
            VertexSet witness{solver.chosen};
            return {k, std::move(witness), solver.nodes};
        }
    }
    // unreachable: the full vertex set always resolves
    throw Error(ErrorCode::BadInput, "no resolving set found");
}

ExactResult metric_dimension_bruteforce(const Graph& g, SolverOptions opts) {
    const int n = g.vertex_count();
    if (n == 1)
        return {0, VertexSet{}, 0};
    const DistanceMatrix d = all_pairs_distances(g);
    std::uint64_t nodes = 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            if (++nodes > opts.node_budget)
                throw Error(ErrorCode::BudgetExceeded,
                            "oracle budget of " + std::to_string(opts.node_budget) + " exhausted");
            VertexSet candidate{idx};
            if (is_resolving_set(g, d, candidate).resolving)
                return {k, std::move(candidate), nodes};
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    throw Error(ErrorCode::BadInput, "no resolving set found");
}

} // namespace resolvedim
