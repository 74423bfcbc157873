#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vcrit/criticality.hpp"
#include "vcrit/expansion.hpp"
#include "vcrit/parallel.hpp"

using namespace vcrit;

namespace {

Graph drop_vertex(const Graph& g, int v) {
    VertexSet keep;
    for (int u = 0; u < g.order(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

bool oracle_critical(const Graph& g, int k) {
    if (oracle::chromatic(g) != k) return false;
    for (int v = 0; v < g.order(); ++v)
        if (oracle::chromatic(drop_vertex(g, v)) >= k) return false;
    return true;
}

}  // namespace

TEST_CASE("criticality landmarks") {
    const auto c5 = is_k_vertex_critical(cycle_graph(5), 3);
    CHECK(c5.verdict);
    CHECK(c5.chi == 3);
    CHECK(c5.chi_minus_vertex == std::vector<int>(5, 2));

    CHECK(is_k_vertex_critical(complete_graph(4), 4).verdict);
    CHECK(is_k_vertex_critical(complete_graph(1), 1).verdict);

    // wheel: C5 joined to a hub is 4-vertex-critical
    Graph wheel(6);
    for (int i = 0; i < 5; ++i) {
        wheel.add_edge(i, (i + 1) % 5);
        wheel.add_edge(i, 5);
    }
    CHECK(is_k_vertex_critical(wheel, 4).verdict);

    // P4 is 2-chromatic but not 2-critical (endpoints are deletable)
    const auto p4 = is_k_vertex_critical(path_graph(4), 2);
    CHECK_FALSE(p4.verdict);
    CHECK(p4.chi == 2);
    CHECK(p4.chi_minus_vertex[0] == 2);

    CHECK_THROWS_AS(is_k_vertex_critical(cycle_graph(5), 0), std::invalid_argument);
}

TEST_CASE("criticality at the wrong k") {
    const Graph x = expand(cycle_graph(5), {2, 2, 2, 2, 1});
    CHECK(is_k_vertex_critical(x, 5).verdict);

    const auto at4 = is_k_vertex_critical(x, 4);
    CHECK_FALSE(at4.verdict);
    CHECK(at4.chi == 5);
    CHECK(at4.chi_minus_vertex.empty());  // verdict settled without the map

    const auto exact = is_k_vertex_critical(x, 4, true);
    CHECK(exact.chi_minus_vertex.size() == 9);
    for (int v = 0; v < 9; ++v)
        CHECK(exact.chi_minus_vertex[v] == oracle::chromatic(drop_vertex(x, v)));
}

TEST_CASE("criticality agrees with the oracle") {
    std::mt19937 rng(307);
    std::uniform_int_distribution<int> order(1, 8);
    for (int i = 0; i < 150; ++i) {
        const Graph g = oracle::random_graph(order(rng), 0.5, rng);
        const int k = oracle::chromatic(g);
        const auto r = is_k_vertex_critical(g, k);
        CHECK(r.chi == k);
        CHECK(r.verdict == oracle_critical(g, k));
        for (int v = 0; v < g.order(); ++v)
            CHECK(r.chi_minus_vertex[v] == oracle::chromatic(drop_vertex(g, v)));
    }
}

TEST_CASE("enumerated graphs are critical at their level") {
    for (int k = 1; k <= 6; ++k)
        for (const Graph& g : enumerate_k_critical(k)) CHECK(is_k_vertex_critical(g, k).verdict);
}

TEST_CASE("per-vertex checks honor the parallelism setting") {
    const Graph x = expand(cycle_graph(5), {2, 2, 2, 2, 1});
    const auto sequential = is_k_vertex_critical(x, 5);
    set_parallelism(4);
    const auto parallel = is_k_vertex_critical(x, 5);
    set_parallelism(0);
    CHECK(sequential.chi_minus_vertex == parallel.chi_minus_vertex);
    CHECK(sequential.verdict == parallel.verdict);
}
