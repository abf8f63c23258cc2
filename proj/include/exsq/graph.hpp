#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace exsq {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Derived graphs (powers, complements, conflict graphs) keep the vertex
/// numbering of their source, so colorings transfer by identity.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return m_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// Adds edge uv. Self-loops and out-of-range endpoints throw; duplicates are ignored.
    /// Returns true if the edge was new.
    bool add_edge(Vertex u, Vertex v);

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

/// Distance from a BFS source; std::nullopt marks an unreachable vertex.
using Distance = std::optional<int>;

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Edges join vertices at distance exactly p in g. p == 1 returns g itself.
Graph exact_power(const Graph& g, int p);

Graph complement(const Graph& g);

/// uv is an edge iff u != v and some vertex of g is adjacent to both.
Graph common_neighbor_graph(const Graph& g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Shortest cycle length, or std::nullopt for forests.
std::optional<int> girth(const Graph& g);

struct Bipartition {
    std::vector<Vertex> x;
    std::vector<Vertex> y;
};

/// 2-coloring derived partition. In each component the side holding the
/// smallest index goes to x. Empty optional when g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

/// Components ordered by their smallest vertex; each sorted ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Largest finite distance; std::nullopt if g is disconnected or empty.
std::optional<int> diameter(const Graph& g);

struct VertexSetResult {
    std::size_t size = 0;
    std::vector<Vertex> witness;
};

/// Maximum clique by branch and bound with greedy-coloring bounds.
/// Exponential in the worst case; meant for n up to a couple hundred.
VertexSetResult max_clique(const Graph& g);

VertexSetResult max_independent_set(const Graph& g);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);
bool is_independent_set(const Graph& g, std::span<const Vertex> vertices);

}  // namespace exsq
