#include "exsq/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "exsq/detail/bitset.hpp"

namespace exsq {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& a : adj_)
        d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::add_edge(Vertex u, Vertex v)
{
    const auto n = static_cast<Vertex>(order());
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        return false;
    au.insert(it, v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
    return true;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < static_cast<Vertex>(order()); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source)
{
    if (source < 0 || static_cast<std::size_t>(source) >= g.order())
        throw std::out_of_range("bfs source " + std::to_string(source) + " out of range");
    std::vector<Distance> dist(g.order());
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        int du = *dist[static_cast<std::size_t>(u)];
        for (Vertex w : g.neighbors(u)) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (!dw) {
                dw = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

Graph exact_power(const Graph& g, int p)
{
    if (p < 1)
        throw std::invalid_argument("exact_power requires p >= 1, got " + std::to_string(p));
    if (p == 1)
        return g;
    const auto n = g.order();
    Graph out(n);
    std::vector<int> depth(n, -1);
    std::vector<Vertex> frontier, next, touched;
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
        depth[static_cast<std::size_t>(s)] = 0;
        touched.assign(1, s);
        frontier.assign(1, s);
        for (int d = 1; d <= p && !frontier.empty(); ++d) {
            next.clear();
            for (Vertex u : frontier)
                for (Vertex w : g.neighbors(u))
                    if (depth[static_cast<std::size_t>(w)] < 0) {
                        depth[static_cast<std::size_t>(w)] = d;
                        touched.push_back(w);
                        next.push_back(w);
                    }
            frontier.swap(next);
        }
        // frontier now holds exactly the vertices first reached at depth p
        for (Vertex v : frontier)
            if (v > s)
                out.add_edge(s, v);
        for (Vertex v : touched)
            depth[static_cast<std::size_t>(v)] = -1;
    }
    return out;
}

Graph complement(const Graph& g)
{
    const auto n = static_cast<Vertex>(g.order());
    Graph out(g.order());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                out.add_edge(u, v);
    return out;
}

Graph common_neighbor_graph(const Graph& g)
{
    Graph out(g.order());
    for (Vertex w = 0; w < static_cast<Vertex>(g.order()); ++w) {
        const auto& nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                out.add_edge(nb[i], nb[j]);
    }
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto& slot = index.at(static_cast<std::size_t>(vertices[i]));
        if (slot >= 0)
            throw std::invalid_argument("induced_subgraph: repeated vertex " + std::to_string(vertices[i]));
        slot = static_cast<int>(i);
    }
    Graph out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i))
                out.add_edge(static_cast<Vertex>(i), j);
        }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges())
        out.add_edge(u, v);
    const auto shift = static_cast<Vertex>(a.order());
    for (auto [u, v] : b.edges())
        out.add_edge(u + shift, v + shift);
    return out;
}

std::optional<int> girth(const Graph& g)
{
    const auto n = g.order();
    std::optional<int> best;
    std::vector<int> dist(n), parent(n);
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            const int du = dist[static_cast<std::size_t>(u)];
            if (best && 2 * du >= *best)
                break;
            for (Vertex w : g.neighbors(u)) {
                auto wi = static_cast<std::size_t>(w);
                if (dist[wi] < 0) {
                    dist[wi] = du + 1;
                    parent[wi] = u;
                    queue.push_back(w);
                } else if (parent[static_cast<std::size_t>(u)] != w) {
                    int len = du + dist[wi] + 1;
                    if (!best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

std::optional<Bipartition> bipartition(const Graph& g)
{
    const auto n = g.order();
    std::vector<int> side(n, -1);
    Bipartition out;
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            const int su = side[static_cast<std::size_t>(u)];
            for (Vertex w : g.neighbors(u)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - su;
                    queue.push_back(w);
                } else if (sw == su) {
                    return std::nullopt;
                }
            }
        }
    }
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        (side[static_cast<std::size_t>(v)] == 0 ? out.x : out.y).push_back(v);
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    const auto n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        auto& comp = out.emplace_back();
        seen[static_cast<std::size_t>(s)] = true;
        stack.assign(1, s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() <= 1;
}

std::optional<int> diameter(const Graph& g)
{
    if (g.order() == 0)
        return std::nullopt;
    int diam = 0;
    for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s)
        for (const auto& d : bfs_distances(g, s)) {
            if (!d)
                return std::nullopt;
            diam = std::max(diam, *d);
        }
    return diam;
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : n_(g.order()), nbr_(n_, detail::Bitset(n_))
    {
        for (Vertex u = 0; u < static_cast<Vertex>(n_); ++u)
            for (Vertex v : g.neighbors(u))
                nbr_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    }

    VertexSetResult run()
    {
        detail::Bitset all(n_);
        for (std::size_t v = 0; v < n_; ++v)
            all.set(v);
        if (n_ > 0)
            expand(all);
        std::sort(best_.begin(), best_.end());
        return {best_.size(), best_};
    }

private:
    // Greedy sequential coloring of the candidate set; vertices come out
    // sorted by color class so the tail carries the largest bounds.
    void color_sort(const detail::Bitset& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const
    {
        order.clear();
        bound.clear();
        detail::Bitset uncolored = cand;
        std::size_t color = 0;
        while (!uncolored.none()) {
            ++color;
            detail::Bitset q = uncolored;
            while (!q.none()) {
                std::size_t v = q.first();
                q.reset(v);
                q.subtract(nbr_[v]);
                uncolored.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    void expand(detail::Bitset cand)
    {
        std::vector<std::size_t> order, bound;
        color_sort(cand, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + bound[i] <= best_.size())
                return;
            std::size_t v = order[i];
            current_.push_back(static_cast<Vertex>(v));
            detail::Bitset next = cand & nbr_[v];
            if (next.none()) {
                if (current_.size() > best_.size())
                    best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            cand.reset(v);
        }
    }

    std::size_t n_;
    std::vector<detail::Bitset> nbr_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

}  // namespace

VertexSetResult max_clique(const Graph& g)
{
    return CliqueSearch(g).run();
}

VertexSetResult max_independent_set(const Graph& g)
{
    return max_clique(complement(g));
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

}  // namespace exsq
