#include "resolvedim/families.hpp"

#include <algorithm>

namespace resolvedim {

namespace {

std::int64_t param(const FamilySpec& spec, const std::string& key, std::int64_t fallback,
                   bool required = false) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        if (required)
            throw Error(ErrorCode::DomainError, spec.name + " requires parameter '" + key + "'");
        return fallback;
    }
    return it->second;
}

void require(bool cond, const std::string& what) {
    if (!cond)
        throw Error(ErrorCode::DomainError, what);
}

FamilyTag tag(const std::string& name, std::map<std::string, std::int64_t> params) {
    return FamilyTag{name, std::move(params)};
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    Certificates c;
    c.family = tag("path", {{"n", n}});
    return Graph::build(n, std::move(edges), std::move(c));
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        cyc[i] = i;
    }
    Certificates c;
    c.outer_cycle = std::move(cyc);
    c.family = tag("cycle", {{"n", n}});
    return Graph::build(n, std::move(edges), std::move(c));
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    Certificates c;
    c.family = tag("complete", {{"n", n}});
    return Graph::build(n, std::move(edges), std::move(c));
}

// K_{2,n-2}: left side {0,1}, right side {2..n-1}
Graph make_complete_bipartite_2(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < n; ++b)
            edges.push_back({a, b});
    Certificates c;
    c.family = tag("complete_bipartite_2", {{"n", n}});
    return Graph::build(n, std::move(edges), std::move(c));
}

// hub 0, rim 1..n
Graph make_wheel(int rim) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= rim; ++i) {
        edges.push_back({0, i});
        edges.push_back({i, i % rim + 1});
    }
    Certificates c;
    c.family = tag("wheel", {{"n", rim}});
    return Graph::build(rim + 1, std::move(edges), std::move(c));
}

// apexes 0,1; rim b_i = i+1 for i in 1..n
Graph make_bipyramid(int rim) {
    const int n = rim + 2;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> faces;
    for (int i = 1; i <= rim; ++i) {
        int b = i + 1;
        int bn = i % rim + 2;
        edges.push_back({0, b});
        edges.push_back({1, b});
        edges.push_back({b, bn});
        faces.push_back({0, b, bn});
        faces.push_back({1, b, bn});
    }
    Certificates c;
    c.faces = std::move(faces);
    c.family = tag("bipyramid", {{"n", rim}});
    return Graph::build(n, std::move(edges), std::move(c));
}

// seeded triangulation of the convex polygon 0..n-1
void triangulate_arc(int a, int b, SplitMix64& rng, std::vector<std::pair<int, int>>& chords) {
    if (b - a < 2)
        return;
    int m = a + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(b - a - 1)));
    if (m - a > 1)
        chords.push_back({a, m});
    if (b - m > 1)
        chords.push_back({m, b});
    triangulate_arc(a, m, rng, chords);
    triangulate_arc(m, b, rng, chords);
}

Graph make_max_outerplanar(int n, std::uint64_t seed) {
    SplitMix64 rng(seed ^ 0x6f757465ULL);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        cyc[i] = i;
    }
    std::vector<std::pair<int, int>> chords;
    triangulate_arc(0, n - 1, rng, chords);
    edges.insert(edges.end(), chords.begin(), chords.end());
    Certificates c;
    c.outer_cycle = std::move(cyc);
    c.family = tag("max_outerplanar", {{"n", n}, {"seed", static_cast<std::int64_t>(seed)}});
    return Graph::build(n, std::move(edges), std::move(c));
}

// random chord subset of a maximal outerplanar graph; the outer cycle is kept
// so the result stays biconnected and the certificate stays valid
Graph make_outerplanar_random(int n, std::uint64_t seed) {
    SplitMix64 rng(seed ^ 0x6f757465ULL);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
        cyc[i] = i;
    }
    std::vector<std::pair<int, int>> chords;
    triangulate_arc(0, n - 1, rng, chords);
    SplitMix64 keep(seed ^ 0x72616e64ULL);
    for (auto ch : chords)
        if (keep.next() & 1)
            edges.push_back(ch);
    Certificates c;
    c.outer_cycle = std::move(cyc);
    c.family = tag("outerplanar_random", {{"n", n}, {"seed", static_cast<std::int64_t>(seed)}});
    return Graph::build(n, std::move(edges), std::move(c));
}

Graph make_stacked_triangulation(int n, std::uint64_t seed) {
    SplitMix64 rng(seed ^ 0x73746163ULL);
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (int v = 4; v < n; ++v) {
        const std::size_t f = rng.below(faces.size());
        const auto face = faces[f];
        faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(f));
        for (int k = 0; k < 3; ++k) {
            edges.push_back({face[k], v});
            faces.push_back({face[k], face[(k + 1) % 3], v});
        }
    }
    Certificates c;
    c.faces = std::move(faces);
    c.family = tag("stacked_triangulation", {{"n", n}, {"seed", static_cast<std::int64_t>(seed)}});
    return Graph::build(n, std::move(edges), std::move(c));
}

} // namespace

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "path",      "cycle",           "complete",           "complete_bipartite_2",
        "wheel",     "bipyramid",       "max_outerplanar",    "outerplanar_random",
        "stacked_triangulation",
    };
    return names;
}

Graph generate(const FamilySpec& spec) {
    const int n = static_cast<int>(param(spec, "n", 0, true));
    const auto seed = static_cast<std::uint64_t>(param(spec, "seed", 1));

    if (spec.name == "path") {
        require(n >= 1, "path requires n >= 1");
        return make_path(n);
    }
    if (spec.name == "cycle") {
        require(n >= 3, "cycle requires n >= 3");
        return make_cycle(n);
    }
    if (spec.name == "complete") {
        require(n >= 1, "complete requires n >= 1");
        return make_complete(n);
    }
    if (spec.name == "complete_bipartite_2") {
        require(n >= 3, "complete_bipartite_2 requires n >= 3 (two plus at least one)");
        return make_complete_bipartite_2(n);
    }
    if (spec.name == "wheel") {
        require(n >= 3, "wheel requires rim n >= 3");
        return make_wheel(n);
    }
    if (spec.name == "bipyramid") {
        require(n >= 3, "bipyramid requires rim n >= 3");
        return make_bipyramid(n);
    }
    if (spec.name == "max_outerplanar") {
        require(n >= 3, "max_outerplanar requires n >= 3");
        return make_max_outerplanar(n, seed);
    }
    if (spec.name == "outerplanar_random") {
        require(n >= 3, "outerplanar_random requires n >= 3");
        return make_outerplanar_random(n, seed);
    }
    if (spec.name == "stacked_triangulation") {
        require(n >= 4, "stacked_triangulation requires n >= 4");
        return make_stacked_triangulation(n, seed);
    }
    throw Error(ErrorCode::DomainError, "unknown family '" + spec.name + "'");
}

std::vector<Graph> conjecture_corpus(int max_n, std::uint64_t seed) {
    std::vector<Graph> out;
    for (int total = 4; total <= max_n; ++total)
        for (int i = 0; i < 3; ++i) {
            FamilySpec spec{"stacked_triangulation",
                            {{"n", total},
                             {"seed", static_cast<std::int64_t>(seed + 1000ULL * total + i)}}};
            out.push_back(generate(spec));
        }
    for (int rim = 3; rim + 2 <= max_n; ++rim)
        out.push_back(generate(FamilySpec{"bipyramid", {{"n", rim}}}));
    return out;
}

} // namespace resolvedim
