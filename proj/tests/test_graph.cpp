#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "exsq/gadgets.hpp"
#include "exsq/generators.hpp"
#include "exsq/graph.hpp"
#include "oracles.hpp"

using namespace exsq;

TEST_SUITE("graph") {

TEST_CASE("construction rejects loops and bad endpoints, ignores duplicates")
{
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.size() == 1);
    CHECK_THROWS(g.add_edge(2, 2));
    CHECK_THROWS(g.add_edge(0, 3));
    CHECK_THROWS(g.add_edge(-1, 0));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("bfs distances on a path and across components")
{
    const Graph g = disjoint_union(oracle::path(4), Graph(1));
    const auto d = bfs_distances(g, 0);
    CHECK(d[0] == 0);
    CHECK(d[3] == 3);
    CHECK_FALSE(d[4].has_value());
    CHECK_THROWS(bfs_distances(g, 5));
}

TEST_CASE("exact square of a star is a clique on the leaves")
{
    for (int t = 1; t <= 6; ++t) {
        const Graph star = oracle::complete_bipartite(1, t);
        const Graph sq = exact_power(star, 2);
        CHECK(sq.degree(0) == 0);
        CHECK(sq.size() == static_cast<std::size_t>(t * (t - 1) / 2));
    }
}

TEST_CASE("exact powers of small fixed graphs")
{
    CHECK(exact_power(oracle::complete(5), 2).size() == 0);
    CHECK(exact_power(oracle::cycle(6), 3).edges() == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});
    const Graph p5 = oracle::path(5);
    CHECK(exact_power(p5, 1) == p5);
    CHECK(exact_power(p5, 4).edges() == std::vector<Edge>{{0, 4}});
    CHECK(exact_power(p5, 5).size() == 0);
    CHECK_THROWS_AS(exact_power(p5, 0), std::invalid_argument);
}

TEST_CASE("exact square of Petersen equals its complement")
{
    const Graph pet = build("petersen").graph;
    CHECK(diameter(pet) == 2);
    CHECK(exact_power(pet, 2) == complement(pet));
}

TEST_CASE("exact powers agree with Floyd-Warshall on random graphs")
{
    Rng rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 25;
        const double p = 0.05 + static_cast<double>(rng() % 40) / 100.0;
        const Graph g = random_graph(n, p, rng);
        const int power = 1 + static_cast<int>(rng() % 5);
        CHECK(exact_power(g, power).edges() == oracle::exact_power_edges(g, power));
    }
}

TEST_CASE("complement and common neighbor graph")
{
    const Graph c5 = oracle::cycle(5);
    CHECK(complement(c5) == exact_power(c5, 2));
    CHECK(complement(complement(c5)) == c5);

    const Graph k3 = oracle::complete(3);
    CHECK(common_neighbor_graph(k3) == k3);
    CHECK(common_neighbor_graph(oracle::path(3)).edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("common neighbor graph equals exact square when there are no triangles")
{
    for (const char* name : {"heawood", "petersen", "triplex", "bip22", "theta", "fig8", "fig9", "dodecahedron"}) {
        const Graph g = build(name).graph;
        REQUIRE(girth(g).value_or(99) > 3);
        CHECK_MESSAGE(common_neighbor_graph(g) == exact_power(g, 2), name);
    }
}

TEST_CASE("induced subgraph and disjoint union")
{
    const Graph c6 = oracle::cycle(6);
    const std::vector<Vertex> pick{1, 2, 3, 5};
    const Graph h = induced_subgraph(c6, pick);
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    const Graph u = disjoint_union(oracle::complete(3), oracle::path(2));
    CHECK(u.order() == 5);
    CHECK(u.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}});
}

TEST_CASE("girth on fixtures and against an edge-deletion oracle")
{
    CHECK(girth(build("petersen").graph) == 5);
    CHECK(girth(build("heawood").graph) == 6);
    CHECK(girth(oracle::complete(4)) == 3);
    CHECK_FALSE(girth(oracle::path(7)).has_value());

    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(2 + rng() % 12, 0.25, rng);
        CHECK(girth(g).value_or(0) == oracle::girth_or_zero(g));
    }
}

TEST_CASE("bipartition and components")
{
    const auto bp = bipartition(oracle::cycle(6));
    REQUIRE(bp.has_value());
    CHECK(bp->x == std::vector<Vertex>{0, 2, 4});
    CHECK(bp->y == std::vector<Vertex>{1, 3, 5});
    CHECK_FALSE(bipartition(oracle::cycle(5)).has_value());

    const auto hw = bipartition(build("heawood").graph);
    REQUIRE(hw.has_value());
    CHECK(hw->x.size() == 7);

    const Graph g = disjoint_union(oracle::path(2), disjoint_union(Graph(1), oracle::cycle(3)));
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[2] == std::vector<Vertex>{3, 4, 5});
    CHECK_FALSE(is_connected(g));
    CHECK_FALSE(diameter(g).has_value());
    CHECK(diameter(oracle::cycle(7)) == 3);
}

TEST_CASE("maximum clique and independent set carry valid witnesses")
{
    Rng rng(3);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = random_graph(1 + rng() % 22, 0.1 + static_cast<double>(rng() % 80) / 100.0, rng);
        const auto c = max_clique(g);
        CHECK(c.size == oracle::clique_number(g));
        CHECK(c.witness.size() == c.size);
        CHECK(is_clique(g, c.witness));
        const auto s = max_independent_set(g);
        CHECK(s.size == oracle::clique_number(complement(g)));
        CHECK(is_independent_set(g, s.witness));
    }
    CHECK(max_clique(Graph()).size == 0);
    CHECK(max_independent_set(Graph(5)).size == 5);
    CHECK(max_clique(complement(build("petersen").graph)).size == 4);
}

}  // TEST_SUITE
