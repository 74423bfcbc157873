#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vcrit/coloring.hpp"
#include "vcrit/expansion.hpp"

using namespace vcrit;

TEST_CASE("k_colorable basics") {
    const Graph c5 = cycle_graph(5);
    CHECK_FALSE(k_colorable(c5, 2).has_value());
    const auto c = k_colorable(c5, 3);
    REQUIRE(c.has_value());
    CHECK(verify_coloring(c5, *c));

    CHECK(k_colorable(complete_graph(5), 5).has_value());
    CHECK_FALSE(k_colorable(complete_graph(5), 4).has_value());
    CHECK(k_colorable(empty_graph(0), 1).has_value());
    CHECK_THROWS_AS(k_colorable(c5, 0), std::invalid_argument);
}

TEST_CASE("chromatic number landmarks") {
    CHECK(chromatic_number(empty_graph(0)).chi == 0);
    CHECK(chromatic_number(empty_graph(6)).chi == 1);
    CHECK(chromatic_number(cycle_graph(5)).chi == 3);
    CHECK(chromatic_number(cycle_graph(6)).chi == 2);
    CHECK(chromatic_number(complete_graph(9)).chi == 9);

    // Petersen graph: outer cycle, inner pentagram, spokes
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
        petersen.add_edge(i, 5 + i);
    }
    CHECK(chromatic_number(petersen).chi == 3);
    CHECK(oracle::chromatic(petersen) == 3);

    // triangle-free graph needing four colors
    const Graph grotzsch = oracle::mycielski(cycle_graph(5));
    CHECK(chromatic_number(grotzsch).chi == 4);
    CHECK(oracle::chromatic(grotzsch) == 4);
}

TEST_CASE("coloring of C5 clique expansions") {
    CHECK_FALSE(k_colorable(expand(cycle_graph(5), {3, 1, 3, 1, 1}), 4).has_value());
    CHECK(chromatic_number(expand(cycle_graph(5), {3, 1, 3, 1, 1})).chi == 5);
    CHECK(chromatic_number(expand(cycle_graph(5), {2, 2, 2, 2, 1})).chi == 5);
    CHECK(chromatic_number(expand(cycle_graph(5), {4, 4, 1, 1, 1})).chi == 8);
}

TEST_CASE("verify_coloring rejects malformed colorings") {
    const Graph c5 = cycle_graph(5);
    CHECK(verify_coloring(c5, Coloring{3, {0, 1, 0, 1, 2}}));
    CHECK_FALSE(verify_coloring(c5, Coloring{3, {0, 1, 0, 1}}));      // wrong size
    CHECK_FALSE(verify_coloring(c5, Coloring{3, {0, 1, 0, 1, 3}}));   // over budget
    CHECK_FALSE(verify_coloring(c5, Coloring{3, {0, 1, 0, 1, -1}}));  // negative
    CHECK_FALSE(verify_coloring(c5, Coloring{3, {0, 0, 1, 0, 1}}));   // improper
}

TEST_CASE("solver agrees with the independent-set-cover oracle") {
    std::mt19937 rng(211);
    std::uniform_int_distribution<int> order(0, 9);
    for (int i = 0; i < 200; ++i) {
        const Graph g = oracle::random_graph(order(rng), 0.5, rng);
        const ChromaticResult r = chromatic_number(g);
        CHECK(r.chi == oracle::chromatic(g));
        CHECK(verify_coloring(g, r.coloring));
        if (r.chi >= 2) CHECK_FALSE(k_colorable(g, r.chi - 1).has_value());
    }
}
