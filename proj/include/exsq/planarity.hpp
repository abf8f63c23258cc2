#pragma once

#include <optional>
#include <vector>

#include "exsq/formats.hpp"
#include "exsq/graph.hpp"

namespace exsq {

/// A graph with a rotation system: for every vertex, a cyclic order of its
/// neighbors. Construction checks that each rotation is a permutation of the
/// vertex's adjacency.
class Embedding {
public:
    Embedding(Graph g, std::vector<std::vector<Vertex>> rotation);
    static Embedding from_planar_code(const PlanarCodeEntry& entry);

    const Graph& graph() const { return graph_; }
    const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[static_cast<std::size_t>(v)]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }

    /// Neighbor following u in the cyclic order around v.
    Vertex successor(Vertex v, Vertex u) const;

    /// Position of directed edge v->w in a dense numbering of all 2m darts.
    std::size_t dart(Vertex v, Vertex w) const;
    std::size_t dart_count() const { return 2 * graph_.size(); }

    PlanarCodeEntry to_planar_code() const { return {rotation_}; }

private:
    Graph graph_;
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<std::size_t> offset_;
    // pos_[dart(v, w)] = index of w inside rotation_[v]
    std::vector<std::size_t> pos_;
};

struct FaceSet {
    /// Each face is the vertex sequence of a closed boundary walk.
    std::vector<std::vector<Vertex>> faces;
    std::vector<int> lengths;
    /// face_by_dart[e.dart(u, v)] is the face containing directed edge u->v.
    std::vector<int> face_by_dart;

    std::size_t count() const { return faces.size(); }
};

/// Traces the faces of a rotation system. Walks start at the
/// lexicographically smallest unused directed edge; from u->v the walk
/// continues with v->successor(v, u).
FaceSet faces(const Embedding& e);

int face_of(const Embedding& e, const FaceSet& fs, Vertex u, Vertex v);

/// Face-adjacency graph: two faces are adjacent when they share an edge.
Graph dual_graph(const Embedding& e, const FaceSet& fs);

/// n - m + f = 2 on every connected component (an isolated vertex counts as
/// having one face).
bool satisfies_euler(const Embedding& e, const FaceSet& fs);

/// Returns a planar rotation system, or nothing if g is not planar.
std::optional<Embedding> is_planar(const Graph& g);

bool is_outerplanar(const Graph& g);

bool is_k4_minor_free(const Graph& g);

}  // namespace exsq
