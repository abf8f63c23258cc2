#include "exsq/planarity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace exsq {

Embedding::Embedding(Graph g, std::vector<std::vector<Vertex>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation))
{
    const auto n = graph_.order();
    if (rotation_.size() != n)
        throw std::invalid_argument("rotation system has " + std::to_string(rotation_.size()) +
                                    " entries for " + std::to_string(n) + " vertices");
    offset_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        offset_[v + 1] = offset_[v] + graph_.neighbors(static_cast<Vertex>(v)).size();
    pos_.assign(offset_[n], static_cast<std::size_t>(-1));
    for (std::size_t v = 0; v < n; ++v) {
        const auto& rot = rotation_[v];
        const auto& nb = graph_.neighbors(static_cast<Vertex>(v));
        if (rot.size() != nb.size())
            throw std::invalid_argument("rotation at vertex " + std::to_string(v) + " has wrong length");
        for (std::size_t i = 0; i < rot.size(); ++i) {
            auto it = std::lower_bound(nb.begin(), nb.end(), rot[i]);
            if (it == nb.end() || *it != rot[i])
                throw std::invalid_argument("rotation at vertex " + std::to_string(v) + " lists non-neighbor " +
                                            std::to_string(rot[i]));
            auto& slot = pos_[offset_[v] + static_cast<std::size_t>(it - nb.begin())];
            if (slot != static_cast<std::size_t>(-1))
                throw std::invalid_argument("rotation at vertex " + std::to_string(v) + " repeats " +
                                            std::to_string(rot[i]));
            slot = i;
        }
    }
}

Embedding Embedding::from_planar_code(const PlanarCodeEntry& entry)
{
    return Embedding(entry.graph(), entry.rotations);
}

std::size_t Embedding::dart(Vertex v, Vertex w) const
{
    const auto& nb = graph_.neighbors(v);
    auto it = std::lower_bound(nb.begin(), nb.end(), w);
    if (it == nb.end() || *it != w)
        throw std::invalid_argument("no edge " + std::to_string(v) + "-" + std::to_string(w));
    return offset_[static_cast<std::size_t>(v)] + static_cast<std::size_t>(it - nb.begin());
}

Vertex Embedding::successor(Vertex v, Vertex u) const
{
    const auto& rot = rotation(v);
    const std::size_t i = pos_[dart(v, u)];
    return rot[(i + 1) % rot.size()];
}

FaceSet faces(const Embedding& e)
{
    const Graph& g = e.graph();
    FaceSet fs;
    fs.face_by_dart.assign(e.dart_count(), -1);
    for (Vertex u = 0; u < static_cast<Vertex>(g.order()); ++u)
        for (Vertex v : g.neighbors(u)) {
            if (fs.face_by_dart[e.dart(u, v)] >= 0)
                continue;
            const int id = static_cast<int>(fs.faces.size());
            std::vector<Vertex> walk;
            Vertex a = u, b = v;
            for (;;) {
                auto d = e.dart(a, b);
                if (fs.face_by_dart[d] >= 0) {
                    if (a != u || b != v)
                        throw std::logic_error("face walk re-entered a used dart");
                    break;
                }
                fs.face_by_dart[d] = id;
                walk.push_back(a);
                Vertex c = e.successor(b, a);
                a = b;
                b = c;
            }
            fs.lengths.push_back(static_cast<int>(walk.size()));
            fs.faces.push_back(std::move(walk));
        }
    return fs;
}

int face_of(const Embedding& e, const FaceSet& fs, Vertex u, Vertex v)
{
    return fs.face_by_dart[e.dart(u, v)];
}

Graph dual_graph(const Embedding& e, const FaceSet& fs)
{
    Graph dual(fs.count());
    for (auto [u, v] : e.graph().edges()) {
        int f = face_of(e, fs, u, v);
        int h = face_of(e, fs, v, u);
        if (f != h)
            dual.add_edge(f, h);
    }
    return dual;
}

bool satisfies_euler(const Embedding& e, const FaceSet& fs)
{
    const Graph& g = e.graph();
    auto comps = connected_components(g);
    std::vector<int> comp_of(g.order());
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c])
            comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    std::vector<long> n(comps.size(), 0), m(comps.size(), 0), f(comps.size(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        n[c] = static_cast<long>(comps[c].size());
    for (auto [u, v] : g.edges())
        ++m[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(u)])];
    for (const auto& face : fs.faces)
        ++f[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(face.front())])];
    for (std::size_t c = 0; c < comps.size(); ++c) {
        long faces_here = m[c] == 0 ? 1 : f[c];
        if (n[c] - m[c] + faces_here != 2)
            return false;
    }
    return true;
}

std::optional<Embedding> is_planar(const Graph& g)
{
    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
    using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

    const auto n = g.order();
    BGraph bg(n);
    int next_index = 0;
    for (auto [u, v] : g.edges()) {
        auto [edge, added] = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
        boost::put(boost::edge_index, bg, edge, next_index++);
    }

    std::vector<std::vector<BEdge>> storage(n);
    auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
    const bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                            boost::boyer_myrvold_params::embedding = embedding);
    if (!planar)
        return std::nullopt;

    std::vector<std::vector<Vertex>> rotation(n);
    for (std::size_t v = 0; v < n; ++v)
        for (const BEdge& edge : storage[v]) {
            auto s = boost::source(edge, bg);
            auto t = boost::target(edge, bg);
            rotation[v].push_back(static_cast<Vertex>(s == v ? t : s));
        }
    Embedding result(g, std::move(rotation));
    if (!satisfies_euler(result, faces(result)))
        throw std::logic_error("planarity test produced an embedding that fails Euler's formula");
    return result;
}

bool is_outerplanar(const Graph& g)
{
    const auto n = g.order();
    Graph apex(n + 1);
    for (auto [u, v] : g.edges())
        apex.add_edge(u, v);
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        apex.add_edge(v, static_cast<Vertex>(n));
    return is_planar(apex).has_value();
}

bool is_k4_minor_free(const Graph& g)
{
    // Reduction on a scratch structure: parallel edges created by
    // suppressing a degree-2 vertex collapse automatically in the sets.
    const auto n = g.order();
    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    std::vector<bool> alive(n, true);
    std::vector<Vertex> work;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        work.push_back(v);
    std::size_t remaining = n;
    while (!work.empty()) {
        Vertex v = work.back();
        work.pop_back();
        auto vi = static_cast<std::size_t>(v);
        if (!alive[vi] || adj[vi].size() > 2)
            continue;
        std::vector<Vertex> nb(adj[vi].begin(), adj[vi].end());
        for (Vertex w : nb)
            adj[static_cast<std::size_t>(w)].erase(v);
        adj[vi].clear();
        alive[vi] = false;
        --remaining;
        if (nb.size() == 2) {
            adj[static_cast<std::size_t>(nb[0])].insert(nb[1]);
            adj[static_cast<std::size_t>(nb[1])].insert(nb[0]);
        }
        for (Vertex w : nb)
            work.push_back(w);
    }
    return remaining == 0;
}

}  // namespace exsq
