#include <doctest.h>

#include <algorithm>
#include <set>

#include "resolvedim/families.hpp"
#include "resolvedim/graph.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace resolvedim;

namespace {

Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    return Graph::build(n, std::move(edges));
}

} // namespace

TEST_CASE("build accepts small graphs and normalizes edges") {
    Graph p3 = from_edges(3, {{1, 0}, {1, 2}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.neighbors(1) == std::vector<int>{0, 2});

    Graph c4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.edge_count() == 4);
}

TEST_CASE("build rejects bad input, naming the offender") {
    CHECK_THROWS_WITH_AS(from_edges(4, {{0, 1}, {1, 2}}), doctest::Contains("vertex 3"),
                         Error);
    CHECK_THROWS_AS(from_edges(3, {{0, 0}, {0, 1}, {1, 2}}), Error);
    CHECK_THROWS_AS(from_edges(3, {{0, 1}, {1, 0}, {1, 2}}), Error);
    CHECK_THROWS_AS(from_edges(3, {{0, 1}, {1, 5}}), Error);
    CHECK_THROWS_AS(from_edges(0, {}), Error);

    try {
        from_edges(3, {{0, 0}, {0, 1}, {1, 2}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SelfLoop);
    }
}

TEST_CASE("certificate validation") {
    Certificates good;
    good.outer_cycle = std::vector<int>{0, 1, 2, 3};
    CHECK_NOTHROW(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, good));

    Certificates not_perm;
    not_perm.outer_cycle = std::vector<int>{0, 1, 2, 2};
    CHECK_THROWS_AS(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, not_perm), Error);

    Certificates bad_step;
    bad_step.outer_cycle = std::vector<int>{0, 2, 1, 3};
    CHECK_THROWS_AS(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, bad_step), Error);

    Certificates bad_face;
    bad_face.faces = std::vector<std::array<int, 3>>{{0, 1, 3}};
    CHECK_THROWS_AS(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, bad_face), Error);
}

TEST_CASE("single vertex distance matrix is [[0]]") {
    Graph k1 = from_edges(1, {});
    DistanceMatrix d = all_pairs_distances(k1);
    CHECK(d.size() == 1);
    CHECK(d.at(0, 0) == 0);
}

TEST_CASE("distances on named examples") {
    Graph p3 = from_edges(3, {{0, 1}, {1, 2}});
    DistanceMatrix dp = all_pairs_distances(p3);
    CHECK(dp.at(0, 0) == 0);
    CHECK(dp.at(0, 1) == 1);
    CHECK(dp.at(0, 2) == 2);

    Graph c4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    DistanceMatrix dc = all_pairs_distances(c4);
    for (int v = 0; v < 4; ++v) {
        CHECK(dc.at(v, v) == 0);
        CHECK(dc.at(v, (v + 1) % 4) == 1);
        CHECK(dc.at(v, (v + 2) % 4) == 2);
    }

    // both apexes adjacent to every rim vertex force diameter 2
    Graph b5 = generate(FamilySpec{"bipyramid", {{"n", 5}}});
    DistanceMatrix db = all_pairs_distances(b5);
    for (int u = 0; u < b5.vertex_count(); ++u)
        for (int v = 0; v < b5.vertex_count(); ++v)
            if (u != v) {
                CHECK(db.at(u, v) >= 1);
                CHECK(db.at(u, v) <= 2);
            }
}

TEST_CASE("BFS distances agree with the relaxation oracle across the corpus") {
    for (const Graph& g : test::small_corpus(10)) {
        DistanceMatrix d = all_pairs_distances(g);
        auto expect = test::naive_distances(g);
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(d.at(u, v) == expect[u][v]);
    }
}

TEST_CASE("block decomposition on named examples") {
    Graph c5 = generate(FamilySpec{"cycle", {{"n", 5}}});
    BlockDecomposition bc = biconnected_components(c5);
    REQUIRE(bc.blocks.size() == 1);
    CHECK(bc.blocks[0].vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(bc.cut_vertices.empty());

    Graph p4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    BlockDecomposition bp = biconnected_components(p4);
    CHECK(bp.blocks.size() == 3);
    CHECK(bp.cut_vertices == std::vector<int>{1, 2});

    // two triangles sharing vertex 2
    Graph bowtie = from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    BlockDecomposition bb = biconnected_components(bowtie);
    CHECK(bb.blocks.size() == 2);
    CHECK(bb.cut_vertices == std::vector<int>{2});
}

TEST_CASE("block decomposition invariants across the corpus") {
    for (const Graph& g : test::small_corpus(10, 1)) {
        BlockDecomposition bc = biconnected_components(g);
        std::set<std::pair<int, int>> all_edges;
        for (const auto& b : bc.blocks)
            for (auto e : b.edges)
                CHECK(all_edges.insert(e).second); // each edge in exactly one block
        std::set<std::pair<int, int>> graph_edges(g.edges().begin(), g.edges().end());
        CHECK(all_edges == graph_edges);

        std::set<int> shared;
        for (std::size_t i = 0; i < bc.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < bc.blocks.size(); ++j) {
                std::vector<int> common;
                std::set_intersection(bc.blocks[i].vertices.begin(), bc.blocks[i].vertices.end(),
                                      bc.blocks[j].vertices.begin(), bc.blocks[j].vertices.end(),
                                      std::back_inserter(common));
                CHECK(common.size() <= 1);
                for (int v : common)
                    shared.insert(v);
            }
        std::set<int> cuts(bc.cut_vertices.begin(), bc.cut_vertices.end());
        CHECK(shared == cuts);
    }
}
