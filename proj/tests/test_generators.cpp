#include "doctest.h"
#include "exsq/generators.hpp"
#include "exsq/planarity.hpp"

using namespace exsq;

TEST_SUITE("generators") {

TEST_CASE("generators are reproducible for a fixed seed")
{
    Rng a(99), b(99);
    for (int i = 0; i < 5; ++i) {
        CHECK(random_connected_subcubic(30, 10, a) == random_connected_subcubic(30, 10, b));
        CHECK(random_honeycomb_patch(40, a) == random_honeycomb_patch(40, b));
        CHECK(random_series_parallel_subcubic(25, a) == random_series_parallel_subcubic(25, b));
    }
}

TEST_CASE("families have their advertised structure")
{
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng() % 50;

        const Graph s = random_connected_subcubic(n, rng() % 20, rng);
        CHECK(s.order() == n);
        CHECK(is_connected(s));
        CHECK(s.max_degree() <= 3);

        const Graph h = random_honeycomb_patch(n, rng);
        CHECK(h.order() == n);
        CHECK(is_connected(h));
        CHECK(h.max_degree() <= 3);
        CHECK(bipartition(h).has_value());
        CHECK(is_planar(h).has_value());

        const Graph t = random_subcubic_tree(n, rng);
        CHECK(t.size() + 1 == n);
        CHECK(is_connected(t));
        CHECK(t.max_degree() <= 3);

        const Graph sp = random_series_parallel_subcubic(rng() % 40, rng);
        CHECK(is_connected(sp));
        CHECK(sp.max_degree() <= 3);
        CHECK(is_k4_minor_free(sp));
    }
}

TEST_CASE("ladders and hexagon chains")
{
    const Graph l = ladder(4);
    CHECK(l.order() == 8);
    CHECK(l.size() == 10);
    const Graph h = hexagon_chain(3);
    CHECK(h.order() == 14);
    CHECK(h.size() == 16);
    CHECK(girth(h) == 6);
    CHECK(is_outerplanar(h));
    CHECK(is_outerplanar(l));
}

TEST_CASE("random graph density extremes")
{
    Rng rng(0);
    CHECK(random_graph(10, 0.0, rng).size() == 0);
    CHECK(random_graph(10, 1.0, rng).size() == 45);
}

}  // TEST_SUITE
