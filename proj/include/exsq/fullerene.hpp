#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exsq/coloring.hpp"
#include "exsq/formats.hpp"
#include "exsq/planarity.hpp"

namespace exsq {

struct FullereneReport {
    bool is_cubic = false;
    std::map<int, int> face_census;
    int pentagon_count = 0;
    int hexagon_count = 0;
    std::optional<int> girth;
    /// Every cycle of length at most 6 bounds a face.
    bool small_cycle_check = false;
    bool verdict = false;
};

FullereneReport is_fullerene(const Embedding& e);

/// Cubic plane graph made of a central p-gon, `rings` concentric cycles of
/// length 2p and an outer p-gon. Rings are joined so that the faces touching
/// either polygon are pentagons and all faces between rings are hexagons.
/// p = 6 gives the drums, p = 5 gives the (5,0) nanotubes (one ring is the
/// dodecahedron).
Embedding make_tube(int polygon, int rings);

/// The k-drum on 12(k+1) vertices: F = vertices 0..5, then k rings of 12,
/// then F' = the last six vertices.
Embedding make_drum(int k);

/// Face ids refer to faces(e) of the embedding the certificate was built for.
struct DrumCertificate {
    int k = 0;
    int F = -1;
    int F_prime = -1;
    std::array<int, 6> pentagons_F{};
    std::array<int, 6> pentagons_F_prime{};

    bool operator==(const DrumCertificate&) const = default;
};

/// Looks for two hexagons, each ringed by six distinct pentagons with no
/// pentagon shared between them. k is the dual distance from F to F' minus
/// two (k + 1 face layers lie strictly between them), so make_drum(k)
/// yields k.
/// Throws std::invalid_argument if e is not a fullerene.
std::optional<DrumCertificate> is_drum(const Embedding& e);

/// Exact-square 3-coloring of a drum: F gets 1,2,3,1,2,3 along its boundary
/// and forced colors are propagated outward; if F' is reached ambiguously,
/// each rotation and reflection of the pattern on F' is tried. Throws
/// std::invalid_argument for a certificate that does not fit e and
/// std::runtime_error if propagation cannot finish.
Coloring drum_3_coloring(const Embedding& e, const DrumCertificate& cert);

struct ThreeColorClassification {
    bool solver_says_3 = false;
    bool is_drum = false;
    bool consistent = false;
};

ThreeColorClassification classify_3_colorability(const Embedding& e);

struct BatchEntry {
    std::size_t index = 0;
    std::size_t n = 0;
    bool fullerene = false;
    /// Exact-square chromatic number, or nothing if it exceeds `cap`.
    std::optional<int> chi;
    int cap = 0;
    std::optional<int> drum_k;
    bool consistent = true;
    bool pass = false;
    std::string error;
};

struct BatchReport {
    std::vector<BatchEntry> entries;
    int max_chi = 0;
    double seconds = 0.0;

    std::size_t passed() const;
    bool all_passed() const { return passed() == entries.size(); }
};

/// Checks every entry independently: fullerene recognition, chromatic number
/// of the exact square searched up to max_chi + 1, and agreement between
/// 3-colorability and drum recognition. Results keep input order whatever
/// the worker count.
BatchReport verify_batch(std::span<const PlanarCodeEntry> entries, int max_chi, unsigned workers = 1);

/// One JSON object per entry followed by a summary object, one per line.
std::string batch_report_json_lines(const BatchReport& report, bool include_timing);

}  // namespace exsq
