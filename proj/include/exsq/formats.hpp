#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exsq/graph.hpp"

namespace exsq {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

/// Decodes one graph6 record (no header, no newline).
Graph decode_graph6(std::string_view record);

/// Decodes a graph6 file: optional header, one record per line. CR bytes are
/// stripped and blank lines skipped. Errors carry the 1-based line number.
std::vector<Graph> decode_graph6_file(std::string_view text);

/// Canonical encoding with zero padding bits; no trailing newline.
std::string encode_graph6(const Graph& g);

/// One plane graph from a planar_code stream. rotations[v] lists the
/// neighbors of v (0-based) in the cyclic order stored in the file.
struct PlanarCodeEntry {
    std::vector<std::vector<Vertex>> rotations;

    std::size_t order() const { return rotations.size(); }
    std::size_t edge_count() const;
    Graph graph() const;

    bool operator==(const PlanarCodeEntry&) const = default;
};

/// Parses ">>planar_code<<" followed by zero or more entries. Each entry is
/// one byte n (1..255) and, per vertex, its 1-based neighbors terminated by 0.
std::vector<PlanarCodeEntry> decode_planar_code(std::span<const std::uint8_t> bytes);
std::vector<PlanarCodeEntry> decode_planar_code(std::string_view bytes);

std::vector<std::uint8_t> encode_planar_code(std::span<const PlanarCodeEntry> entries);

/// Which format a buffer looks like, by header or first byte.
enum class FileFormat { graph6, planar_code };
FileFormat sniff_format(std::string_view bytes);

}  // namespace exsq
