#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exsq/coloring.hpp"
#include "exsq/graph.hpp"
#include "exsq/planarity.hpp"

namespace exsq {

/// Names: heawood, petersen, triplex, bip22, theta, outerplanar_fig4, fig6a,
/// fig6b, fig7, fig8, fig9, wheel6, triangulation12, dodecahedron, c60,
/// star(t), drum_cap. `param` is t for star and unused otherwise.
struct GadgetId {
    std::string name;
    int param = 0;
};

/// Accepts a bare name, or "star(5)" / "star:5" for the star family.
GadgetId parse_gadget_id(std::string_view text);
std::vector<std::string> gadget_names();

struct Gadget {
    std::string name;
    Graph graph;
    /// labels[v] is the vertex name of v, e.g. "u3", "x" or "s'".
    std::vector<std::string> labels;
    /// Set for the plane constructions (dodecahedron, c60, drum_cap).
    std::optional<Embedding> embedding;

    /// Index of a labeled vertex; throws std::out_of_range for unknown labels.
    Vertex vertex(std::string_view label) const;
};

/// Throws std::invalid_argument for unknown names or bad parameters.
Gadget build(const GadgetId& id);
Gadget build(std::string_view name);

struct VerificationReport {
    std::string name;
    /// One human-readable line per check performed.
    std::vector<std::string> records;
    std::uint64_t classes = 0;
    std::uint64_t failures = 0;
    double seconds = 0.0;
    /// First failing case, when there is one.
    std::string witness;

    bool ok() const { return failures == 0; }
};

struct ListLemmaOptions {
    unsigned workers = 1;
    bool stop_at_first_failure = false;
};

/// Enumerates, up to permutations of the colors 1..5, every assignment of
/// lists with exactly sizes[v] colors to the vertices with sizes[v] < 5
/// (the others get all five colors) and checks each for L-colorability.
/// An assignment is enumerated only if it is the lexicographically smallest
/// in its orbit, comparing lists by their bitmask value in vertex order.
VerificationReport verify_list_lemma(const Graph& h, std::span<const int> sizes, std::string name,
                                     const ListLemmaOptions& options = {});

/// 6-wheel: rim lists of sizes 2,2,2,2,2,3 on a..f, full list on the hub.
VerificationReport verify_lemma_wheel(const ListLemmaOptions& options = {});

/// Triangulation on 12 vertices: a, d, g get 3 colors, b, c, e, f, h, i get
/// 2, and x, y, z get all 5.
VerificationReport verify_lemma_triangulation(const ListLemmaOptions& options = {});

/// fig6a, fig6b, fig8 and fig9 have no exact-square 3-coloring; fig7 has one
/// but none with c(x) = c(y).
VerificationReport verify_gadget_lemmas();

/// Smallest image of a list tuple under the 120 permutations of the colors.
std::vector<std::uint8_t> canonical_lists(std::span<const std::uint8_t> masks);

}  // namespace exsq
