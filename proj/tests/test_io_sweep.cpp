#include <doctest.h>

#include "resolvedim/families.hpp"
#include "resolvedim/json_io.hpp"
#include "resolvedim/sweep.hpp"

using namespace resolvedim;

TEST_CASE("graph JSON round trip preserves structure and certificates") {
    for (const char* family : {"cycle", "bipyramid", "max_outerplanar", "stacked_triangulation"}) {
        Graph g = generate(FamilySpec{family, {{"n", family == std::string("bipyramid") ? 5 : 7},
                                               {"seed", 13}}});
        Graph back = graph_from_json(graph_to_json(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
        CHECK(back.certificates().outer_cycle == g.certificates().outer_cycle);
        CHECK(back.certificates().faces == g.certificates().faces);
        REQUIRE(back.certificates().family);
        CHECK(back.certificates().family->name == g.certificates().family->name);
        CHECK(back.certificates().family->params == g.certificates().family->params);
    }
}

TEST_CASE("graph JSON parse failures") {
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 2}}), Error);
    CHECK_THROWS_AS(load_graph("/nonexistent/graph.json"), Error);
    auto j = nlohmann::json::parse(R"({"n": 3, "edges": [[0,1],[1,2],[2,0]],
                                       "certificates": {"outer_cycle": [0,1]}})");
    CHECK_THROWS_AS(graph_from_json(j), Error);
}

TEST_CASE("sweep over cycles matches the known dimensions") {
    SweepOptions opts;
    opts.families = {"cycle"};
    opts.n_min = 4;
    opts.n_max = 8;
    opts.seed = 7;
    std::vector<SweepRow> rows = run_sweep(opts);
    REQUIRE_FALSE(rows.empty());
    int hamiltonian_rows = 0;
    int error_rows = 0;
    for (const SweepRow& row : rows) {
        if (!row.error.empty()) {
            // the odd-position selection provably fails on the 4-cycle
            ++error_rows;
            CHECK(row.n_total == 4);
            CHECK(row.error == "VerificationFailed");
            continue;
        }
        REQUIRE(row.beta_exact);
        CHECK(*row.beta_exact == 2);
        CHECK(row.bound_size <= row.bound_formula);
        CHECK(*row.beta_exact <= row.bound_size);
        if (row.method == "hamiltonian_outerplanar") {
            ++hamiltonian_rows;
            CHECK(row.bound_size == (row.n_total + 1) / 2);
            CHECK(row.verified);
        }
    }
    CHECK(hamiltonian_rows == 4); // n = 5..8; the n = 4 selection cannot verify
    CHECK(error_rows == 1);
}

TEST_CASE("sweep CSV is reproducible for a fixed seed") {
    SweepOptions opts;
    opts.families = {"path", "bipyramid"};
    opts.n_min = 4;
    opts.n_max = 7;
    opts.seed = 42;
    std::string a = sweep_to_csv(run_sweep(opts), opts);
    std::string b = sweep_to_csv(run_sweep(opts), opts);
    CHECK(a == b);
    CHECK(a.find("seconds") == std::string::npos);
}

TEST_CASE("conjecture sweep tabulates beta minus the total-count formula") {
    SweepOptions opts;
    opts.conjecture = true;
    opts.n_max = 9;
    opts.seed = 3;
    std::vector<SweepRow> rows = run_sweep(opts);
    REQUIRE_FALSE(rows.empty());
    bool saw_bipyramid = false;
    for (const SweepRow& row : rows) {
        CHECK(row.error.empty());
        REQUIRE(row.beta_exact);
        REQUIRE(row.beta_minus_2n5);
        if (row.family == "bipyramid") {
            saw_bipyramid = true;
            CHECK(*row.beta_minus_2n5 >= 0);
            CHECK(*row.beta_minus_2n5 <= 1);
        }
    }
    CHECK(saw_bipyramid);

    std::string csv = sweep_to_csv(rows, opts);
    CHECK(csv.rfind("family,params,n_total,beta_exact,method,bound_size,bound_formula,verified,"
                    "beta_minus_2n5\n", 0) == 0);
}
