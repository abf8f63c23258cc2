#include "exsq/generators.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace exsq {

namespace {

std::size_t below(Rng& rng, std::size_t bound)
{
    return static_cast<std::size_t>(rng() % bound);
}

double unit(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

using Site = std::pair<int, int>;

// Brick-wall drawing of the hexagonal lattice.
std::vector<Site> lattice_neighbors(Site s)
{
    auto [r, c] = s;
    return {{r, c - 1}, {r, c + 1}, {(r + c) % 2 == 0 ? r + 1 : r - 1, c}};
}

Graph lattice_subgraph(const std::vector<Site>& sites)
{
    std::map<Site, Vertex> index;
    for (std::size_t i = 0; i < sites.size(); ++i)
        index.emplace(sites[i], static_cast<Vertex>(i));
    Graph g(sites.size());
    for (std::size_t i = 0; i < sites.size(); ++i)
        for (Site t : lattice_neighbors(sites[i]))
            if (auto it = index.find(t); it != index.end())
                g.add_edge(static_cast<Vertex>(i), it->second);
    return g;
}

}  // namespace

Graph random_graph(std::size_t n, double p, Rng& rng)
{
    Graph g(n);
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
        for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v)
            if (unit(rng) < p)
                g.add_edge(u, v);
    return g;
}

Graph random_subcubic_tree(std::size_t n, Rng& rng)
{
    Graph g(n);
    std::vector<Vertex> open;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
        if (v > 0) {
            const std::size_t k = below(rng, open.size());
            const Vertex parent = open[k];
            g.add_edge(parent, v);
            if (g.degree(parent) == 3) {
                open[k] = open.back();
                open.pop_back();
            }
        }
        open.push_back(v);
    }
    return g;
}

Graph random_connected_subcubic(std::size_t n, std::size_t extra, Rng& rng)
{
    Graph g = random_subcubic_tree(n, rng);
    for (std::size_t attempt = 0; attempt < extra && n > 1; ++attempt) {
        auto u = static_cast<Vertex>(below(rng, n));
        auto v = static_cast<Vertex>(below(rng, n));
        if (u != v && g.degree(u) < 3 && g.degree(v) < 3 && !g.adjacent(u, v))
            g.add_edge(u, v);
    }
    return g;
}

Graph random_honeycomb_patch(std::size_t n, Rng& rng)
{
    std::vector<Site> chosen;
    std::set<Site> taken;
    std::vector<Site> frontier{{0, 0}};
    std::set<Site> in_frontier{{0, 0}};
    while (chosen.size() < n) {
        const std::size_t k = below(rng, frontier.size());
        const Site s = frontier[k];
        frontier[k] = frontier.back();
        frontier.pop_back();
        chosen.push_back(s);
        taken.insert(s);
        for (Site t : lattice_neighbors(s))
            if (!taken.contains(t) && in_frontier.insert(t).second)
                frontier.push_back(t);
    }
    return lattice_subgraph(chosen);
}

Graph ladder(std::size_t len)
{
    Graph g(2 * len);
    for (std::size_t i = 0; i < len; ++i) {
        const auto a = static_cast<Vertex>(i);
        const auto b = static_cast<Vertex>(len + i);
        g.add_edge(a, b);
        if (i + 1 < len) {
            g.add_edge(a, a + 1);
            g.add_edge(b, b + 1);
        }
    }
    return g;
}

Graph hexagon_chain(std::size_t hexagons)
{
    std::vector<Site> sites;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c <= 2 * static_cast<int>(hexagons); ++c)
            sites.emplace_back(r, c);
    return lattice_subgraph(sites);
}

Graph random_series_parallel_subcubic(std::size_t steps, Rng& rng)
{
    std::vector<Edge> edges{{0, 1}};
    std::vector<int> degree{1, 1};
    auto fresh = [&] {
        degree.push_back(0);
        return static_cast<Vertex>(degree.size() - 1);
    };
    auto link = [&](Vertex a, Vertex b) {
        edges.emplace_back(a, b);
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    };
    for (std::size_t step = 0; step < steps; ++step) {
        switch (below(rng, 3)) {
        case 0: {
            const auto v = static_cast<Vertex>(below(rng, degree.size()));
            if (degree[static_cast<std::size_t>(v)] < 3)
                link(v, fresh());
            break;
        }
        case 1: {
            const std::size_t k = below(rng, edges.size());
            auto [a, b] = edges[k];
            const Vertex w = fresh();
            edges[k] = {a, w};
            ++degree[static_cast<std::size_t>(w)];
            edges.emplace_back(w, b);
            ++degree[static_cast<std::size_t>(w)];
            break;
        }
        default: {
            auto [a, b] = edges[below(rng, edges.size())];
            if (degree[static_cast<std::size_t>(a)] >= 3 || degree[static_cast<std::size_t>(b)] >= 3)
                break;
            Vertex prev = a;
            const std::size_t inner = 1 + below(rng, 2);
            for (std::size_t i = 0; i < inner; ++i) {
                const Vertex w = fresh();
                link(prev, w);
                prev = w;
            }
            link(prev, b);
            break;
        }
        }
    }
    Graph g(degree.size());
    for (auto [a, b] : edges)
        if (!g.add_edge(a, b))
            throw std::logic_error("series-parallel generator produced a parallel edge");
    return g;
}

}  // namespace exsq
