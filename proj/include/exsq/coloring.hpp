#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "exsq/graph.hpp"

namespace exsq {

/// colors[v] in 1..palette, or 0 for an uncolored vertex of a partial map.
struct Coloring {
    std::vector<int> colors;
    int palette = 0;

    bool is_total() const;
    bool operator==(const Coloring&) const = default;
};

/// Allowed colors per vertex as bitmasks over {1..5}: bit c-1 stands for color c.
struct ListAssignment {
    static constexpr std::uint8_t kFull = 0x1F;

    std::vector<std::uint8_t> masks;

    static std::uint8_t mask_of(std::initializer_list<int> colors);
    static ListAssignment uniform(std::size_t n, std::uint8_t mask);
};

enum class ColoringMode { proper, exact_square, injective };

std::string_view to_string(ColoringMode mode);
std::optional<ColoringMode> parse_coloring_mode(std::string_view text);

/// Graph whose proper colorings are exactly the colorings of g in `mode`.
Graph conflict_graph(const Graph& g, ColoringMode mode);

/// Backtracking search over per-vertex color domains (up to 64 colors).
/// Vertices with the smallest domain go first; ties prefer more uncolored
/// neighbors, then the lower index. Assigning a color removes it from the
/// domains of uncolored neighbors, and an emptied domain cuts the branch.
/// One instance can be reused for many solves on the same graph.
class DomainSearch {
public:
    explicit DomainSearch(const Graph& h);

    /// domains[v] is the bitmask of colors v may take. With `break_symmetry`
    /// a color may only be introduced if every smaller color is already in
    /// use, which is sound only when all domains are equal.
    bool solve(std::span<const std::uint64_t> domains, bool break_symmetry);

    /// Coloring found by the last successful solve (colors are 1-based).
    const std::vector<int>& witness() const { return color_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool search(std::size_t colored);

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> dom_;
    std::vector<int> color_;
    std::vector<Vertex> trail_;
    bool break_symmetry_ = false;
    int max_used_ = 0;
    std::uint64_t nodes_ = 0;
};

/// A proper k-coloring of h extending `pre` (0 entries are free), if any.
/// Throws std::invalid_argument when pre uses colors outside 1..k or is
/// itself improper on h.
std::optional<Coloring> is_k_colorable(const Graph& h, int k, std::span<const int> pre = {});

struct ChromaticResult {
    int k = 0;
    Coloring witness;
};

/// Smallest k with a proper coloring; starts from the clique number.
ChromaticResult chromatic_number(const Graph& h);

/// Like chromatic_number but gives up (returns nothing) above `cap` colors.
std::optional<ChromaticResult> chromatic_number_capped(const Graph& h, int cap);

ChromaticResult exact_square_chromatic(const Graph& g);
ChromaticResult injective_chromatic(const Graph& g);

/// Proper coloring with every vertex colored from its list, if one exists.
std::optional<Coloring> list_colorable(const Graph& h, const ListAssignment& lists);

struct ValidationResult {
    bool ok = true;
    std::optional<Edge> violation;
};

/// Independent certificate check. Conflicting pairs are recomputed from BFS
/// distances or common neighbors of g, not taken from a conflict graph.
/// Throws std::invalid_argument for partial colorings.
ValidationResult validate_coloring(const Graph& g, const Coloring& c, ColoringMode mode);

}  // namespace exsq
