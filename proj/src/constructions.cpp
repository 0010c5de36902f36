#include "resolvedim/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "resolvedim/families.hpp"

namespace resolvedim {

const char* method_name(Method m) {
    switch (m) {
    case Method::HamiltonianOuterplanar: return "hamiltonian_outerplanar";
    case Method::Coloring: return "coloring";
    case Method::Outerplanar: return "outerplanar";
    case Method::MaximalPlanar: return "maximal_planar";
    case Method::Bipyramid: return "bipyramid";
    }
    return "unknown";
}

namespace {

ResolveCheck verify_or_throw(const Graph& g, const VertexSet& set, const std::string& context) {
    const DistanceMatrix d = all_pairs_distances(g);
    ResolveCheck check = is_resolving_set(g, d, set);
    if (!check.resolving)
        throw VerificationError(context + ": pair (" + std::to_string(check.witness.first) + "," +
                                    std::to_string(check.witness.second) + ") is unresolved",
                                check.witness);
    return check;
}

std::string join_vertices(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

} // namespace

ConstructionReport hamiltonian_outerplanar_set(const Graph& g, const std::vector<int>& cycle_order) {
    const int n = g.vertex_count();
    if (static_cast<int>(cycle_order.size()) != n)
        throw Error(ErrorCode::NotHamiltonianCycle,
                    "cycle has " + std::to_string(cycle_order.size()) + " entries, expected " +
                        std::to_string(n));
    std::vector<char> seen(n, 0);
    for (int v : cycle_order) {
        if (v < 0 || v >= n || seen[v])
            throw Error(ErrorCode::NotHamiltonianCycle,
                        "cycle is not a permutation (vertex " + std::to_string(v) + ")");
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
        int u = cycle_order[i], v = cycle_order[(i + 1) % n];
        if (!g.has_edge(u, v))
            throw Error(ErrorCode::NotHamiltonianCycle, "cycle step (" + std::to_string(u) + "," +
                                                            std::to_string(v) + ") is not an edge");
    }

    std::vector<int> picked;
    for (int i = 0; i < n; i += 2)
        picked.push_back(cycle_order[i]);
    VertexSet set = VertexSet::of(std::move(picked), n);
    verify_or_throw(g, set, "hamiltonian odd-position selection");
    return {Method::HamiltonianOuterplanar, std::move(set), (n + 1) / 2, true, ""};
}

ConstructionReport coloring_bound_set(const Graph& g, const Coloring& coloring) {
    const int n = g.vertex_count();
    if (static_cast<int>(coloring.colors.size()) != n)
        throw Error(ErrorCode::ImproperColoring, "coloring covers " +
                                                     std::to_string(coloring.colors.size()) +
                                                     " vertices, expected " + std::to_string(n));
    std::vector<int> counts(coloring.num_colors, 0);
    for (int v = 0; v < n; ++v) {
        int c = coloring.colors[v];
        if (c < 0 || c >= coloring.num_colors)
            throw Error(ErrorCode::ImproperColoring,
                        "vertex " + std::to_string(v) + " has color " + std::to_string(c) +
                            " outside 0.." + std::to_string(coloring.num_colors - 1));
        ++counts[c];
    }
    for (int c = 0; c < coloring.num_colors; ++c)
        if (counts[c] == 0)
            throw Error(ErrorCode::ImproperColoring,
                        "color " + std::to_string(c) + " is unused; indices must be dense");
    for (auto [u, v] : g.edges())
        if (coloring.colors[u] == coloring.colors[v])
            throw Error(ErrorCode::ImproperColoring, "edge (" + std::to_string(u) + "," +
                                                         std::to_string(v) + ") is monochromatic");

    int top = 0;
    for (int c = 1; c < coloring.num_colors; ++c)
        if (counts[c] > counts[top])
            top = c; // ties keep the smallest color index

    const AlikePartition part = alike_partition(g);
    std::vector<int> picked;
    for (int v = 0; v < n; ++v)
        if (coloring.colors[v] != top)
            picked.push_back(v);
    for (const auto& cls : part.classes) {
        std::vector<int> in_top;
        for (int v : cls)
            if (coloring.colors[v] == top)
                in_top.push_back(v);
        // keep the smallest index unselected
        for (std::size_t i = 1; i < in_top.size(); ++i)
            picked.push_back(in_top[i]);
    }

    const int chi = coloring.num_colors;
    const int s = part.class_count();
    const int bound = (chi - 1) * n / chi + (n - s);

    VertexSet set = VertexSet::of(std::move(picked), n);
    verify_or_throw(g, set, "coloring selection");
    return {Method::Coloring, std::move(set), bound, true, ""};
}

namespace {

bool alike_in(const Graph& g, int u, int v) {
    return g.neighbors(u) == g.neighbors(v);
}

} // namespace

ConstructionReport outerplanar_set(const Graph& g) {
    const int n = g.vertex_count();
    if (g.certificates().outer_cycle) {
        if (!is_outerplanar_certificate(g))
            throw Error(ErrorCode::NotOuterplanar, "outer_cycle certificate has crossing chords");
    } else if (n <= 12) {
        if (!is_outerplanar_small(g))
            throw Error(ErrorCode::NotOuterplanar, "graph contains a K4 or K23 minor");
    } else {
        throw Error(ErrorCode::NotOuterplanar,
                    "no outer_cycle certificate and n > 12 exceeds the minor-search fallback");
    }
    const int bound = 2 * n / 3;

    if (n <= 4) {
        // the temporary-edge argument needs blocks of five or more vertices to
        // be alike-free; at this scale the exact minimum is instant and always
        // fits the bound
        ExactResult exact = metric_dimension_exact(g);
        return {Method::Outerplanar, std::move(exact.witness), bound, true,
                "n <= 4: exact minimum returned"};
    }

    const BlockDecomposition blocks = biconnected_components(g);
    auto edges = g.edges();
    std::vector<std::string> notes;

    for (const auto& block : blocks.blocks) {
        if (block.vertices.size() != 4)
            continue;
        if (block.edges.size() == 4) {
            // C_4 block: chord every globally alike antipodal pair
            const auto& vs = block.vertices;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j) {
                    int u = vs[i], v = vs[j];
                    if (!g.has_edge(u, v) && alike_in(g, u, v)) {
                        edges.push_back({u, v});
                        notes.push_back("C4 block " + join_vertices(vs) + ": temporary edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
                    }
                }
        } else if (block.edges.size() == 5) {
            // diamond block: swap the diagonal for the alike-pair edge
            const auto& vs = block.vertices;
            std::map<int, int> deg;
            for (auto [u, v] : block.edges) {
                ++deg[u];
                ++deg[v];
            }
            std::vector<int> hubs, tips;
            for (int v : vs)
                (deg[v] == 3 ? hubs : tips).push_back(v);
            int d1 = hubs[0], d2 = hubs[1];
            int a1 = tips[0], a2 = tips[1];
            if (alike_in(g, a1, a2)) {
                auto diag = std::minmax(d1, d2);
                edges.erase(std::remove(edges.begin(), edges.end(),
                                        std::pair<int, int>{diag.first, diag.second}),
                            edges.end());
                edges.push_back({a1, a2});
                notes.push_back("diamond block " + join_vertices(vs) + ": diagonal (" +
                                std::to_string(diag.first) + "," + std::to_string(diag.second) +
                                ") swapped for (" + std::to_string(a1) + "," + std::to_string(a2) +
                                ")");
            }
        }
    }

    const Graph modified = Graph::build(n, std::move(edges));
    const Coloring coloring = color_outerplanar(modified);
    ConstructionReport selection = coloring_bound_set(modified, coloring);

    verify_or_throw(g, selection.set, "outerplanar selection on the original graph");
    if (selection.set.size() > bound)
        throw Error(ErrorCode::VerificationFailed,
                    "selection of " + std::to_string(selection.set.size()) +
                        " vertices exceeds floor(2n/3) = " + std::to_string(bound) +
                        "; alike classes outside the bad blocks break the bound argument");

    std::string note_text;
    for (std::size_t i = 0; i < notes.size(); ++i) {
        if (i)
            note_text += "; ";
        note_text += notes[i];
    }
    return {Method::Outerplanar, std::move(selection.set), bound, true, std::move(note_text)};
}

namespace {

ConstructionReport bipyramid_set_mapped(const Graph& g, const BipyramidDecomposition& dec) {
    const int rim = static_cast<int>(dec.rim.size());
    ConstructionReport canon = bipyramid_set(rim);
    // canonical labels: apex a1 = 0, rim b_i = i+1
    std::vector<int> mapped;
    for (int v : canon.set.members) {
        if (v == 0)
            mapped.push_back(dec.apexes.first);
        else if (v == 1)
            mapped.push_back(dec.apexes.second);
        else
            mapped.push_back(dec.rim[v - 2]);
    }
    VertexSet set = VertexSet::of(std::move(mapped), g.vertex_count());
    verify_or_throw(g, set, "bipyramid selection mapped onto graph labels");
    canon.set = std::move(set);
    return canon;
}

} // namespace

ConstructionReport bipyramid_set_for(const Graph& g) {
    auto dec = is_bipyramid(g);
    if (!dec)
        throw Error(ErrorCode::DomainError, "graph is not a bipyramid");
    const int rim = static_cast<int>(dec->rim.size());
    if (rim >= 5)
        return bipyramid_set_mapped(g, *dec);
    // rims 3 and 4 sit outside the closed form; the graphs are tiny
    ExactResult exact = metric_dimension_exact(g);
    ConstructionReport rep{Method::Bipyramid, std::move(exact.witness),
                           3 * g.vertex_count() / 4, true,
                           "bipyramid rim " + std::to_string(rim) +
                               " below formula domain; exact minimum"};
    return rep;
}

ConstructionReport maximal_planar_set(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 4)
        throw Error(ErrorCode::DomainError, "maximal planar graphs need n >= 4");
    if (!g.certificates().faces)
        throw Error(ErrorCode::NotMaximalPlanar, "faces certificate required");
    if (!is_maximal_planar_certificate(g))
        throw Error(ErrorCode::NotMaximalPlanar, "faces certificate fails the triangulation checks");
    const int bound = 3 * n / 4;

    if (is_bipyramid(g))
        return bipyramid_set_for(g);

    ColorResult four = color_with(g, 4);
    if (four.outcome == ColorOutcome::NoneExists)
        throw Error(ErrorCode::ColoringNotFound,
                    "no 4-coloring exists; the certificate cannot describe a planar triangulation");
    ConstructionReport selection = coloring_bound_set(g, *four.coloring);
    if (selection.set.size() > bound)
        throw Error(ErrorCode::VerificationFailed,
                    "selection of " + std::to_string(selection.set.size()) +
                        " vertices exceeds floor(3n/4) = " + std::to_string(bound));
    return {Method::MaximalPlanar, std::move(selection.set), bound, true, selection.notes};
}

namespace {

struct BipyramidScratch {
    Graph graph;
    DistanceMatrix dist;
    int rim;

    explicit BipyramidScratch(int n)
        : graph(generate(FamilySpec{"bipyramid", {{"n", n}}})), dist(all_pairs_distances(graph)),
          rim(n) {}

    // rim index (1-based) -> canonical vertex
    static int vertex_of(int rim_index) { return rim_index + 1; }

    bool resolves(const std::vector<int>& rim_indices) const {
        std::vector<int> members{0};
        for (int i : rim_indices)
            members.push_back(vertex_of(i));
        VertexSet set = VertexSet::of(std::move(members), graph.vertex_count());
        return is_resolving_set(graph, dist, set).resolving;
    }

    long long unresolved_pairs(const std::vector<int>& rim_indices) const {
        std::vector<int> members{0};
        for (int i : rim_indices)
            members.push_back(vertex_of(i));
        VertexSet set = VertexSet::of(std::move(members), graph.vertex_count());
        const int n = graph.vertex_count();
        std::vector<std::vector<int>> vecs(n);
        for (int u = 0; u < n; ++u)
            for (int w : set.members)
                vecs[u].push_back(dist.at(u, w));
        long long bad = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (vecs[u] == vecs[v])
                    ++bad;
        return bad;
    }
};

bool exists_of_size(const BipyramidScratch& scratch, int rim_count, std::vector<int>& found) {
    // one apex is forced and the second apex never separates rim vertices, so
    // searching apex + rim_count rim members covers all candidate sets
    const int n = scratch.rim;
    if (rim_count <= 0 || rim_count > n)
        return false;
    std::vector<int> idx(rim_count);
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        if (scratch.resolves(idx)) {
            found = idx;
            return true;
        }
        int i = rim_count - 1;
        while (i >= 0 && idx[i] == n - rim_count + i + 1)
            --i;
        if (i < 0)
            return false;
        ++idx[i];
        for (int j = i + 1; j < rim_count; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

int bipyramid_dimension(int cycle_size) {
    if (cycle_size < 5)
        throw Error(ErrorCode::DomainError,
                    "bipyramid dimension formula is stated for n >= 5, got " +
                        std::to_string(cycle_size));
    return 2 * cycle_size / 5 + 1;
}

ConstructionReport bipyramid_set(int cycle_size) {
    const int n = cycle_size;
    if (n < 5)
        throw Error(ErrorCode::DomainError,
                    "bipyramid_set requires rim n >= 5, got " + std::to_string(n));

    BipyramidScratch scratch(n);
    const int target_total = bipyramid_dimension(n);
    const int target_rim = target_total - 1;

    // spaced pattern: b_1, b_5k, b_5k+2, b_n
    std::set<int> pattern{1, n};
    for (int k = 1; 5 * k <= n; ++k)
        pattern.insert(5 * k);
    for (int k = 1; 5 * k + 2 <= n; ++k)
        pattern.insert(5 * k + 2);
    std::vector<int> rim_sel(pattern.begin(), pattern.end());

    std::vector<std::string> notes;
    const std::string pattern_text = join_vertices(rim_sel);

    // drop pattern vertices while oversized, smallest index first
    while (static_cast<int>(rim_sel.size()) > target_rim) {
        bool dropped = false;
        for (std::size_t i = 0; i < rim_sel.size(); ++i) {
            std::vector<int> trial = rim_sel;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            if (scratch.resolves(trial)) {
                notes.push_back("dropped b" + std::to_string(rim_sel[i]));
                rim_sel = std::move(trial);
                dropped = true;
                break;
            }
        }
        if (!dropped)
            break;
    }

    // still oversized with a working selection: settle whether the formula
    // size is attainable at all before accepting the excess
    if (static_cast<int>(rim_sel.size()) > target_rim && scratch.resolves(rim_sel)) {
        double combos = 1.0;
        for (int i = 0; i < target_rim; ++i)
            combos *= static_cast<double>(n - i) / (i + 1);
        if (combos <= 2e6) {
            std::vector<int> found;
            if (exists_of_size(scratch, target_rim, found)) {
                notes.push_back("replaced selection with exhaustive minimum " +
                                join_vertices(found));
                rim_sel = std::move(found);
            } else {
                notes.push_back("no resolving set of size " + std::to_string(target_total) +
                                " exists for rim " + std::to_string(n) +
                                "; the floor(2n/5)+1 count is one short here");
            }
        } else {
            notes.push_back("formula-size enumeration too large to certify; keeping " +
                            std::to_string(rim_sel.size() + 1) + " vertices");
        }
    }

    // grow or swap while unresolved
    int guard = 4 * n + 8;
    while (!scratch.resolves(rim_sel)) {
        if (--guard < 0)
            throw Error(ErrorCode::RepairFailed, "bipyramid repair did not converge");
        if (static_cast<int>(rim_sel.size()) < target_rim) {
            long long best_bad = -1;
            int best = -1;
            for (int c = 1; c <= n; ++c) {
                if (std::find(rim_sel.begin(), rim_sel.end(), c) != rim_sel.end())
                    continue;
                std::vector<int> trial = rim_sel;
                trial.push_back(c);
                std::sort(trial.begin(), trial.end());
                long long bad = scratch.unresolved_pairs(trial);
                if (best == -1 || bad < best_bad) {
                    best = c;
                    best_bad = bad;
                }
            }
            rim_sel.push_back(best);
            std::sort(rim_sel.begin(), rim_sel.end());
            notes.push_back("added b" + std::to_string(best));
            continue;
        }
        // at target size: look for an improving swap, smallest indices first
        long long cur_bad = scratch.unresolved_pairs(rim_sel);
        int swap_out = -1, swap_in = -1;
        long long best_bad = cur_bad;
        for (std::size_t i = 0; i < rim_sel.size() && swap_out == -1; ++i)
            for (int c = 1; c <= n; ++c) {
                if (std::find(rim_sel.begin(), rim_sel.end(), c) != rim_sel.end())
                    continue;
                std::vector<int> trial = rim_sel;
                trial[i] = c;
                std::sort(trial.begin(), trial.end());
                long long bad = scratch.unresolved_pairs(trial);
                if (bad < best_bad) {
                    best_bad = bad;
                    swap_out = static_cast<int>(i);
                    swap_in = c;
                    if (bad == 0)
                        break;
                }
            }
        if (swap_out != -1) {
            notes.push_back("swapped b" + std::to_string(rim_sel[swap_out]) + " for b" +
                            std::to_string(swap_in));
            rim_sel[static_cast<std::size_t>(swap_out)] = swap_in;
            std::sort(rim_sel.begin(), rim_sel.end());
            continue;
        }
        // hill climb is stuck at the target size: settle the question exactly
        std::vector<int> found;
        if (exists_of_size(scratch, target_rim, found)) {
            notes.push_back("replaced selection with " + join_vertices(found));
            rim_sel = std::move(found);
        } else {
            notes.push_back("no resolving set of size " + std::to_string(target_total) +
                            " exists for rim " + std::to_string(n) +
                            "; the floor(2n/5)+1 count is one short here");
            std::vector<int> wider;
            if (!exists_of_size(scratch, target_rim + 1, wider))
                throw Error(ErrorCode::RepairFailed,
                            "no resolving set within one of the formula size");
            rim_sel = std::move(wider);
        }
    }

    std::vector<int> members{0};
    for (int i : rim_sel)
        members.push_back(BipyramidScratch::vertex_of(i));
    VertexSet set = VertexSet::of(std::move(members), scratch.graph.vertex_count());
    verify_or_throw(scratch.graph, set, "bipyramid selection");

    const int bound = std::max(target_total, set.size());
    std::string note_text = "seed pattern " + pattern_text + ", final rim " +
                            join_vertices(rim_sel);
    for (const auto& note : notes)
        note_text += "; " + note;
    if (set.size() > target_total)
        note_text += "; size exceeds the stated formula value " + std::to_string(target_total);
    return {Method::Bipyramid, std::move(set), bound, true, std::move(note_text)};
}

} // namespace resolvedim
