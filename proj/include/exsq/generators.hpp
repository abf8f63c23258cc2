#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "exsq/graph.hpp"

namespace exsq {

/// All generators draw from a 64-bit Mersenne Twister and reduce with a
/// plain modulo, so a seed gives the same graphs on every platform.
using Rng = std::mt19937_64;

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, Rng& rng);

/// Connected graph with maximum degree 3: a random tree of max degree 3
/// followed by `extra` attempts to add an edge between two vertices that
/// still have spare degree.
Graph random_connected_subcubic(std::size_t n, std::size_t extra, Rng& rng);

/// Connected induced subgraph of the hexagonal lattice with n vertices,
/// grown from a random site. Always bipartite, planar and subcubic.
Graph random_honeycomb_patch(std::size_t n, Rng& rng);

/// Random tree with maximum degree 3.
Graph random_subcubic_tree(std::size_t n, Rng& rng);

/// Ladder P_2 x P_len.
Graph ladder(std::size_t len);

/// Row of `hexagons` hexagons, consecutive ones sharing an edge.
Graph hexagon_chain(std::size_t hexagons);

/// Connected subcubic series-parallel graph built by `steps` random
/// operations starting from one edge: attach a pendant vertex, subdivide an
/// edge, or join the ends of an edge by a new path of length 2 or 3.
Graph random_series_parallel_subcubic(std::size_t steps, Rng& rng);

}  // namespace exsq
