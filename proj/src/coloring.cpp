#include "exsq/coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace exsq {

bool Coloring::is_total() const
{
    return std::none_of(colors.begin(), colors.end(), [](int c) { return c == 0; });
}

std::uint8_t ListAssignment::mask_of(std::initializer_list<int> colors)
{
    std::uint8_t m = 0;
    for (int c : colors) {
        if (c < 1 || c > 5)
            throw std::invalid_argument("list color " + std::to_string(c) + " outside 1..5");
        m = static_cast<std::uint8_t>(m | (1U << (c - 1)));
    }
    return m;
}

ListAssignment ListAssignment::uniform(std::size_t n, std::uint8_t mask)
{
    return {std::vector<std::uint8_t>(n, mask)};
}

std::string_view to_string(ColoringMode mode)
{
    switch (mode) {
    case ColoringMode::proper: return "proper";
    case ColoringMode::exact_square: return "exact-square";
    case ColoringMode::injective: return "injective";
    }
    return "?";
}

std::optional<ColoringMode> parse_coloring_mode(std::string_view text)
{
    for (auto m : {ColoringMode::proper, ColoringMode::exact_square, ColoringMode::injective})
        if (text == to_string(m))
            return m;
    return std::nullopt;
}

Graph conflict_graph(const Graph& g, ColoringMode mode)
{
    switch (mode) {
    case ColoringMode::proper: return g;
    case ColoringMode::exact_square: return exact_power(g, 2);
    case ColoringMode::injective: return common_neighbor_graph(g);
    }
    throw std::invalid_argument("unknown coloring mode");
}

DomainSearch::DomainSearch(const Graph& h) : adj_(h.order())
{
    for (Vertex v = 0; v < static_cast<Vertex>(h.order()); ++v)
        adj_[static_cast<std::size_t>(v)] = h.neighbors(v);
}

bool DomainSearch::solve(std::span<const std::uint64_t> domains, bool break_symmetry)
{
    if (domains.size() != adj_.size())
        throw std::invalid_argument("domain count does not match vertex count");
    dom_.assign(domains.begin(), domains.end());
    color_.assign(adj_.size(), 0);
    trail_.clear();
    break_symmetry_ = break_symmetry;
    max_used_ = 0;
    nodes_ = 0;
    for (auto d : dom_)
        if (d == 0)
            return false;
    return search(0);
}

bool DomainSearch::search(std::size_t colored)
{
    const std::size_t n = adj_.size();
    if (colored == n)
        return true;
    ++nodes_;

    std::size_t pick = n;
    int best_size = 65;
    int best_degree = -1;
    for (std::size_t v = 0; v < n; ++v) {
        if (color_[v] != 0)
            continue;
        const int size = std::popcount(dom_[v]);
        if (size > best_size)
            continue;
        int degree = 0;
        for (Vertex w : adj_[v])
            degree += color_[static_cast<std::size_t>(w)] == 0;
        if (size < best_size || degree > best_degree) {
            pick = v;
            best_size = size;
            best_degree = degree;
        }
    }

    std::uint64_t choices = dom_[pick];
    if (break_symmetry_ && max_used_ < 63)
        choices &= (std::uint64_t{1} << (max_used_ + 1)) - 1;

    while (choices != 0) {
        const int bit = std::countr_zero(choices);
        choices &= choices - 1;
        const std::uint64_t mask = std::uint64_t{1} << bit;
        const std::size_t mark = trail_.size();
        bool alive = true;
        color_[pick] = bit + 1;
        for (Vertex w : adj_[pick]) {
            auto wi = static_cast<std::size_t>(w);
            if (color_[wi] == 0 && (dom_[wi] & mask)) {
                dom_[wi] &= ~mask;
                trail_.push_back(w);
                if (dom_[wi] == 0) {
                    alive = false;
                    break;
                }
            }
        }
        const int saved_max = max_used_;
        max_used_ = std::max(max_used_, bit + 1);
        if (alive && search(colored + 1))
            return true;
        max_used_ = saved_max;
        while (trail_.size() > mark) {
            dom_[static_cast<std::size_t>(trail_.back())] |= mask;
            trail_.pop_back();
        }
        color_[pick] = 0;
    }
    return false;
}

std::optional<Coloring> is_k_colorable(const Graph& h, int k, std::span<const int> pre)
{
    const std::size_t n = h.order();
    if (k < 0)
        throw std::invalid_argument("palette size must be non-negative");
    if (!pre.empty() && pre.size() != n)
        throw std::invalid_argument("precoloring has " + std::to_string(pre.size()) + " entries for " +
                                    std::to_string(n) + " vertices");
    bool has_pre = false;
    for (std::size_t v = 0; v < pre.size(); ++v) {
        if (pre[v] == 0)
            continue;
        has_pre = true;
        if (pre[v] < 1 || pre[v] > k)
            throw std::invalid_argument("precolor " + std::to_string(pre[v]) + " at vertex " + std::to_string(v) +
                                        " outside 1.." + std::to_string(k));
        for (Vertex w : h.neighbors(static_cast<Vertex>(v)))
            if (pre[static_cast<std::size_t>(w)] == pre[v])
                throw std::invalid_argument("precoloring conflicts on edge " + std::to_string(v) + "-" +
                                            std::to_string(w));
    }
    if (n == 0)
        return Coloring{{}, k};
    if (k == 0)
        return std::nullopt;
    if (k > 64) {
        if (has_pre || static_cast<std::size_t>(k) < n)
            throw std::invalid_argument("palettes above 64 colors are not supported");
        Coloring c{std::vector<int>(n), k};
        for (std::size_t v = 0; v < n; ++v)
            c.colors[v] = static_cast<int>(v) + 1;
        return c;
    }

    const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> domains(n, full);
    for (std::size_t v = 0; v < pre.size(); ++v)
        if (pre[v] != 0)
            domains[v] = std::uint64_t{1} << (pre[v] - 1);
    DomainSearch search(h);
    if (!search.solve(domains, !has_pre))
        return std::nullopt;
    return Coloring{search.witness(), k};
}

std::optional<ChromaticResult> chromatic_number_capped(const Graph& h, int cap)
{
    if (h.order() == 0)
        return ChromaticResult{0, Coloring{{}, 0}};
    const int lower = std::max<int>(1, static_cast<int>(max_clique(h).size));
    for (int k = lower; k <= cap; ++k)
        if (auto c = is_k_colorable(h, k))
            return ChromaticResult{k, std::move(*c)};
    return std::nullopt;
}

ChromaticResult chromatic_number(const Graph& h)
{
    auto r = chromatic_number_capped(h, static_cast<int>(h.order()));
    return std::move(*r);
}

ChromaticResult exact_square_chromatic(const Graph& g)
{
    return chromatic_number(exact_power(g, 2));
}

ChromaticResult injective_chromatic(const Graph& g)
{
    return chromatic_number(common_neighbor_graph(g));
}

std::optional<Coloring> list_colorable(const Graph& h, const ListAssignment& lists)
{
    if (lists.masks.size() != h.order())
        throw std::invalid_argument("list assignment covers " + std::to_string(lists.masks.size()) + " of " +
                                    std::to_string(h.order()) + " vertices");
    std::vector<std::uint64_t> domains(lists.masks.begin(), lists.masks.end());
    for (std::size_t v = 0; v < domains.size(); ++v)
        if (domains[v] == 0 || (domains[v] & ~std::uint64_t{ListAssignment::kFull}))
            throw std::invalid_argument("list at vertex " + std::to_string(v) + " is empty or outside {1..5}");
    DomainSearch search(h);
    if (!search.solve(domains, false))
        return std::nullopt;
    return Coloring{search.witness(), 5};
}

ValidationResult validate_coloring(const Graph& g, const Coloring& c, ColoringMode mode)
{
    const auto n = static_cast<Vertex>(g.order());
    if (c.colors.size() != g.order())
        throw std::invalid_argument("coloring size does not match the graph");
    if (!c.is_total())
        throw std::invalid_argument("coloring is partial");
    for (int col : c.colors)
        if (col < 1 || (c.palette > 0 && col > c.palette))
            throw std::invalid_argument("color " + std::to_string(col) + " outside the palette");

    auto color = [&](Vertex v) { return c.colors[static_cast<std::size_t>(v)]; };
    switch (mode) {
    case ColoringMode::proper:
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : g.neighbors(u))
                if (u < v && color(u) == color(v))
                    return {false, Edge{u, v}};
        break;
    case ColoringMode::exact_square:
        for (Vertex u = 0; u < n; ++u) {
            auto dist = bfs_distances(g, u);
            for (Vertex v = u + 1; v < n; ++v)
                if (dist[static_cast<std::size_t>(v)] == 2 && color(u) == color(v))
                    return {false, Edge{u, v}};
        }
        break;
    case ColoringMode::injective: {
        std::optional<Edge> worst;
        for (Vertex w = 0; w < n; ++w) {
            const auto& nb = g.neighbors(w);
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (color(nb[i]) == color(nb[j])) {
                        Edge e{nb[i], nb[j]};
                        if (!worst || e < *worst)
                            worst = e;
                    }
        }
        if (worst)
            return {false, worst};
        break;
    }
    }
    return {};
}

}  // namespace exsq
