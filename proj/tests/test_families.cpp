#include <doctest.h>

#include "resolvedim/analysis.hpp"
#include "resolvedim/families.hpp"
#include "resolvedim/metric.hpp"

using namespace resolvedim;

TEST_CASE("bipyramid rim 3 is K_5 minus an edge") {
    Graph b3 = generate(FamilySpec{"bipyramid", {{"n", 3}}});
    CHECK(b3.vertex_count() == 5);
    CHECK(b3.edge_count() == 9);
    CHECK_FALSE(b3.has_edge(0, 1));
}

TEST_CASE("maximal outerplanar counts and certificate") {
    Graph g = generate(FamilySpec{"max_outerplanar", {{"n", 6}, {"seed", 11}}});
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 2 * 6 - 3);
    REQUIRE(g.certificates().outer_cycle);
    CHECK(is_outerplanar_certificate(g));

    for (int n = 3; n <= 16; ++n)
        for (std::int64_t s = 0; s < 3; ++s) {
            Graph m = generate(FamilySpec{"max_outerplanar", {{"n", n}, {"seed", s}}});
            CHECK(m.edge_count() == 2 * n - 3);
            CHECK(is_outerplanar_certificate(m));
        }
}

TEST_CASE("stacked triangulation counts and face consistency") {
    Graph g = generate(FamilySpec{"stacked_triangulation", {{"n", 6}, {"seed", 4}}});
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 3 * 6 - 6);
    REQUIRE(g.certificates().faces);
    CHECK(g.certificates().faces->size() == 2 * 6 - 4);
    CHECK(is_maximal_planar_certificate(g));

    for (int n = 4; n <= 16; ++n)
        for (std::int64_t s = 0; s < 3; ++s) {
            Graph m = generate(FamilySpec{"stacked_triangulation", {{"n", n}, {"seed", s}}});
            CHECK(m.edge_count() == 3 * n - 6);
            CHECK(is_maximal_planar_certificate(m));
        }
}

TEST_CASE("same seed reproduces the same graph") {
    for (const char* family : {"max_outerplanar", "outerplanar_random", "stacked_triangulation"}) {
        Graph a = generate(FamilySpec{family, {{"n", 11}, {"seed", 99}}});
        Graph b = generate(FamilySpec{family, {{"n", 11}, {"seed", 99}}});
        CHECK(a.edges() == b.edges());
    }
    Graph a = generate(FamilySpec{"max_outerplanar", {{"n", 11}, {"seed", 99}}});
    Graph c = generate(FamilySpec{"max_outerplanar", {{"n", 11}, {"seed", 100}}});
    CHECK(a.edges() != c.edges());
}

TEST_CASE("domain errors carry the violated constraint") {
    CHECK_THROWS_AS(generate(FamilySpec{"bipyramid", {{"n", 2}}}), Error);
    CHECK_THROWS_AS(generate(FamilySpec{"cycle", {{"n", 2}}}), Error);
    CHECK_THROWS_AS(generate(FamilySpec{"stacked_triangulation", {{"n", 3}}}), Error);
    CHECK_THROWS_AS(generate(FamilySpec{"no_such_family", {{"n", 5}}}), Error);
    try {
        generate(FamilySpec{"bipyramid", {{"n", 2}}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DomainError);
    }
}

TEST_CASE("wheel and complete bipartite shapes") {
    Graph w5 = generate(FamilySpec{"wheel", {{"n", 5}}});
    CHECK(w5.vertex_count() == 6);
    CHECK(w5.degree(0) == 5);

    Graph k24 = generate(FamilySpec{"complete_bipartite_2", {{"n", 6}}});
    CHECK(k24.edge_count() == 2 * 4);
    CHECK(k24.degree(0) == 4);
    CHECK(k24.degree(2) == 2);
}

TEST_CASE("conjecture corpus composition") {
    std::vector<Graph> corpus = conjecture_corpus(7, 5);
    bool has_b5 = false, has_s5 = false, has_s6 = false, has_s7 = false;
    for (const Graph& g : corpus) {
        REQUIRE(g.certificates().family);
        CHECK(is_maximal_planar_certificate(g));
        const auto& fam = *g.certificates().family;
        if (fam.name == "bipyramid" && g.vertex_count() == 7)
            has_b5 = true;
        if (fam.name == "stacked_triangulation") {
            has_s5 |= g.vertex_count() == 5;
            has_s6 |= g.vertex_count() == 6;
            has_s7 |= g.vertex_count() == 7;
        }
    }
    CHECK(has_b5);
    CHECK(has_s5);
    CHECK(has_s6);
    CHECK(has_s7);

    std::vector<Graph> k4s = conjecture_corpus(4, 5);
    CHECK_FALSE(k4s.empty());
    for (const Graph& g : k4s) {
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 6);
    }
}

TEST_CASE("generated biconnected outerplanar graphs have no alike pair at n >= 5") {
    for (int n = 5; n <= 14; ++n)
        for (std::int64_t s = 0; s < 4; ++s) {
            Graph g = generate(FamilySpec{"outerplanar_random", {{"n", n}, {"seed", s}}});
            BlockDecomposition blocks = biconnected_components(g);
            REQUIRE(blocks.blocks.size() == 1); // outer cycle kept, so biconnected
            CHECK(alike_partition(g).class_count() == n);
        }
}

TEST_CASE("generated maximal planar graphs with alike pairs are bipyramids") {
    for (int n = 4; n <= 14; ++n)
        for (std::int64_t s = 0; s < 4; ++s) {
            Graph g = generate(FamilySpec{"stacked_triangulation", {{"n", n}, {"seed", s}}});
            if (alike_partition(g).class_count() < n)
                CHECK(is_bipyramid(g));
        }
    for (int rim = 3; rim <= 12; ++rim) {
        Graph g = generate(FamilySpec{"bipyramid", {{"n", rim}}});
        CHECK(alike_partition(g).class_count() < g.vertex_count());
        CHECK(is_bipyramid(g));
    }
}
