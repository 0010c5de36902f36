#include <doctest.h>

#include "resolvedim/analysis.hpp"
#include "resolvedim/families.hpp"
#include "support/corpus.hpp"

using namespace resolvedim;

namespace {

bool proper(const Graph& g, const Coloring& c) {
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v])
            return false;
    return true;
}

} // namespace

TEST_CASE("color_with distinguishes none-exists from found") {
    Graph c5 = generate(FamilySpec{"cycle", {{"n", 5}}});
    ColorResult two = color_with(c5, 2);
    CHECK(two.outcome == ColorOutcome::NoneExists);

    ColorResult three = color_with(c5, 3);
    REQUIRE(three.outcome == ColorOutcome::Found);
    CHECK(proper(c5, *three.coloring));
    CHECK(three.coloring->num_colors <= 3);

    Graph stacked = generate(FamilySpec{"stacked_triangulation", {{"n", 9}, {"seed", 7}}});
    ColorResult four = color_with(stacked, 4);
    REQUIRE(four.outcome == ColorOutcome::Found);
    CHECK(proper(stacked, *four.coloring));
}

TEST_CASE("color_with budget") {
    Graph stacked = generate(FamilySpec{"stacked_triangulation", {{"n", 12}, {"seed", 3}}});
    CHECK_THROWS_AS(color_with(stacked, 4, {2}), Error);
}

TEST_CASE("outerplanar coloring uses at most three colors") {
    Graph p4 = generate(FamilySpec{"path", {{"n", 4}}});
    CHECK(color_outerplanar(p4).num_colors <= 2);

    Graph hex = generate(FamilySpec{"max_outerplanar", {{"n", 6}, {"seed", 1}}});
    Coloring ch = color_outerplanar(hex);
    CHECK(ch.num_colors == 3);
    CHECK(proper(hex, ch));

    Graph c4 = generate(FamilySpec{"cycle", {{"n", 4}}});
    CHECK(color_outerplanar(c4).num_colors == 2);

    for (int n = 3; n <= 14; ++n)
        for (int s = 0; s < 3; ++s) {
            Graph g = generate(FamilySpec{"outerplanar_random", {{"n", n}, {"seed", 40 + s}}});
            Coloring c = color_outerplanar(g);
            CHECK(c.num_colors <= 3);
            CHECK(proper(g, c));
        }
}

TEST_CASE("degeneracy violation is reported") {
    Graph k4 = generate(FamilySpec{"complete", {{"n", 4}}});
    CHECK_THROWS_AS(color_outerplanar(k4), Error);
}

TEST_CASE("outerplanar certificate check") {
    Graph hex = generate(FamilySpec{"max_outerplanar", {{"n", 6}, {"seed", 2}}});
    CHECK(is_outerplanar_certificate(hex));

    Certificates c;
    c.outer_cycle = std::vector<int>{0, 1, 2, 3, 4, 5};
    Graph crossing = Graph::build(
        6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}}, c);
    CHECK_FALSE(is_outerplanar_certificate(crossing));

    Graph c4 = generate(FamilySpec{"cycle", {{"n", 4}}});
    CHECK(is_outerplanar_certificate(c4));

    Graph bare = Graph::build(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(is_outerplanar_certificate(bare), Error);
}

TEST_CASE("maximal planar certificate check") {
    Graph k4 = generate(FamilySpec{"stacked_triangulation", {{"n", 4}, {"seed", 1}}});
    CHECK(is_maximal_planar_certificate(k4));

    Graph octa = generate(FamilySpec{"bipyramid", {{"n", 4}}});
    CHECK(is_maximal_planar_certificate(octa));

    // diamond with a two-face certificate: edge count disqualifies it
    Certificates c;
    c.faces = std::vector<std::array<int, 3>>{{0, 1, 2}, {0, 2, 3}};
    Graph diamond = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, c);
    CHECK_FALSE(is_maximal_planar_certificate(diamond));
}

TEST_CASE("bipyramid recognition") {
    Graph b5 = generate(FamilySpec{"bipyramid", {{"n", 5}}});
    auto dec = is_bipyramid(b5);
    REQUIRE(dec);
    CHECK(dec->apexes == std::pair<int, int>{0, 1});
    CHECK(dec->rim.size() == 5);

    Graph k5 = generate(FamilySpec{"complete", {{"n", 5}}});
    CHECK_FALSE(is_bipyramid(k5));

    Graph octa = generate(FamilySpec{"bipyramid", {{"n", 4}}});
    auto od = is_bipyramid(octa);
    REQUIRE(od);
    CHECK(od->apexes == std::pair<int, int>{0, 1}); // smallest of the three antipodal pairs
    CHECK(od->rim.size() == 4);

    for (int rim = 3; rim <= 20; ++rim) {
        auto d = is_bipyramid(generate(FamilySpec{"bipyramid", {{"n", rim}}}));
        REQUIRE(d);
        CHECK(static_cast<int>(d->rim.size()) == rim);
    }
}

TEST_CASE("hamiltonian cycle extraction") {
    Graph c6 = generate(FamilySpec{"cycle", {{"n", 6}}});
    auto cyc = hamiltonian_cycle(c6);
    REQUIRE(cyc);
    CHECK(*cyc == std::vector<int>{0, 1, 2, 3, 4, 5});

    Graph p4 = generate(FamilySpec{"path", {{"n", 4}}});
    CHECK_FALSE(hamiltonian_cycle(p4));

    Graph hex = generate(FamilySpec{"max_outerplanar", {{"n", 6}, {"seed", 5}}});
    auto hc = hamiltonian_cycle(hex);
    REQUIRE(hc);
    CHECK(*hc == std::vector<int>{0, 1, 2, 3, 4, 5});

    // without the certificate the search still finds the cycle
    Graph bare = Graph::build(6, hex.edges());
    auto found = hamiltonian_cycle(bare);
    REQUIRE(found);
    CHECK((*found)[0] == 0);
}

TEST_CASE("small minor search") {
    Graph k4 = generate(FamilySpec{"complete", {{"n", 4}}});
    CHECK(has_minor_small(k4, MinorTarget::K4));

    Graph c6 = generate(FamilySpec{"cycle", {{"n", 6}}});
    CHECK_FALSE(has_minor_small(c6, MinorTarget::K4));

    Graph k23 = generate(FamilySpec{"complete_bipartite_2", {{"n", 5}}});
    CHECK(has_minor_small(k23, MinorTarget::K23));

    // subdivided K4 (each edge once) is found topologically
    Graph sub = Graph::build(10, {{0, 4}, {4, 1}, {0, 5}, {5, 2}, {0, 6}, {6, 3},
                                  {1, 7}, {7, 2}, {1, 8}, {8, 3}, {2, 9}, {9, 3}});
    CHECK(has_minor_small(sub, MinorTarget::K4));

    Graph wheel = generate(FamilySpec{"wheel", {{"n", 5}}});
    CHECK(has_minor_small(wheel, MinorTarget::K4));

    Graph big = generate(FamilySpec{"path", {{"n", 13}}});
    CHECK_THROWS_AS(has_minor_small(big, MinorTarget::K4), Error);
}

TEST_CASE("certified outerplanar graphs have neither forbidden minor") {
    for (int n = 4; n <= 10; ++n)
        for (int s = 0; s < 2; ++s) {
            Graph g = generate(FamilySpec{"outerplanar_random", {{"n", n}, {"seed", 60 + s}}});
            CHECK(is_outerplanar_certificate(g));
            CHECK_FALSE(has_minor_small(g, MinorTarget::K4));
            CHECK_FALSE(has_minor_small(g, MinorTarget::K23));
            CHECK(is_outerplanar_small(g));
        }
}
