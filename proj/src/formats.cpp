#include "exsq/formats.hpp"

#include <algorithm>

namespace exsq {

namespace {

constexpr int kBias = 63;

bool valid_g6_byte(unsigned char c)
{
    return c >= 63 && c <= 126;
}

std::size_t packed_bytes(std::size_t n)
{
    return (n * (n - (n > 0 ? 1 : 0)) / 2 + 5) / 6;
}

[[noreturn]] void fail(const std::string& what)
{
    throw FormatError(what);
}

}  // namespace

Graph decode_graph6(std::string_view rec)
{
    if (rec.empty())
        fail("graph6: empty record");
    for (std::size_t i = 0; i < rec.size(); ++i)
        if (!valid_g6_byte(static_cast<unsigned char>(rec[i])))
            fail("graph6: byte " + std::to_string(static_cast<unsigned char>(rec[i])) + " at offset " +
                 std::to_string(i) + " outside 63..126");

    std::size_t pos = 0;
    std::size_t n = 0;
    auto take = [&](std::size_t count) {
        if (pos + count > rec.size())
            fail("graph6: truncated vertex count");
        std::size_t v = 0;
        for (std::size_t i = 0; i < count; ++i)
            v = (v << 6) | static_cast<std::size_t>(rec[pos + i] - kBias);
        pos += count;
        return v;
    };
    if (static_cast<unsigned char>(rec[0]) != 126) {
        n = take(1);
    } else if (rec.size() > 1 && static_cast<unsigned char>(rec[1]) == 126) {
        pos = 2;
        n = take(6);
    } else {
        pos = 1;
        n = take(3);
    }

    const std::size_t need = packed_bytes(n);
    if (rec.size() - pos < need)
        fail("graph6: truncated adjacency bits (need " + std::to_string(need) + " bytes, have " +
             std::to_string(rec.size() - pos) + ")");
    if (rec.size() - pos > need)
        fail("graph6: trailing garbage after " + std::to_string(pos + need) + " bytes");

    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            int value = rec[pos + bit / 6] - kBias;
            if ((value >> (5 - bit % 6)) & 1)
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    return g;
}

std::vector<Graph> decode_graph6_file(std::string_view text)
{
    std::vector<Graph> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string line(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        std::erase(line, '\r');
        std::string_view rec = line;
        if (line_no == 1 && rec.starts_with(kGraph6Header))
            rec.remove_prefix(kGraph6Header.size());
        if (rec.empty())
            continue;
        try {
            out.push_back(decode_graph6(rec));
        } catch (const FormatError& e) {
            throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

std::string encode_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    std::vector<int> packed(packed_bytes(n), 0);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit)
            if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)))
                packed[bit / 6] |= 1 << (5 - bit % 6);
    for (int b : packed)
        out.push_back(static_cast<char>(b + kBias));
    return out;
}

std::size_t PlanarCodeEntry::edge_count() const
{
    std::size_t total = 0;
    for (const auto& r : rotations)
        total += r.size();
    return total / 2;
}

Graph PlanarCodeEntry::graph() const
{
    Graph g(order());
    for (std::size_t v = 0; v < rotations.size(); ++v)
        for (Vertex w : rotations[v])
            g.add_edge(static_cast<Vertex>(v), w);
    return g;
}

std::vector<PlanarCodeEntry> decode_planar_code(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < kPlanarCodeHeader.size() ||
        !std::equal(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end(), bytes.begin()))
        fail("planar_code: missing >>planar_code<< header");

    std::vector<PlanarCodeEntry> out;
    std::size_t pos = kPlanarCodeHeader.size();
    while (pos < bytes.size()) {
        const std::size_t entry_index = out.size();
        const std::string where = "planar_code entry " + std::to_string(entry_index) + ": ";
        const std::size_t n = bytes[pos++];
        if (n == 0)
            fail(where + "vertex count 0 (multi-byte n > 255 encoding is not supported)");

        PlanarCodeEntry entry;
        entry.rotations.resize(n);
        for (std::size_t v = 0; v < n; ++v) {
            auto& rot = entry.rotations[v];
            for (;;) {
                if (pos >= bytes.size())
                    fail(where + "unterminated record for vertex " + std::to_string(v + 1));
                const std::size_t w = bytes[pos++];
                if (w == 0)
                    break;
                if (w > n)
                    fail(where + "neighbor " + std::to_string(w) + " of vertex " + std::to_string(v + 1) +
                         " exceeds n=" + std::to_string(n));
                if (w == v + 1)
                    fail(where + "self-loop at vertex " + std::to_string(v + 1));
                const auto w0 = static_cast<Vertex>(w - 1);
                if (std::find(rot.begin(), rot.end(), w0) != rot.end())
                    fail(where + "repeated neighbor " + std::to_string(w) + " at vertex " + std::to_string(v + 1));
                rot.push_back(w0);
            }
        }
        for (std::size_t v = 0; v < n; ++v)
            for (Vertex w : entry.rotations[v]) {
                const auto& back = entry.rotations[static_cast<std::size_t>(w)];
                if (std::find(back.begin(), back.end(), static_cast<Vertex>(v)) == back.end())
                    fail(where + "asymmetric adjacency " + std::to_string(v + 1) + "->" + std::to_string(w + 1));
            }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<PlanarCodeEntry> decode_planar_code(std::string_view bytes)
{
    return decode_planar_code(
        std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

std::vector<std::uint8_t> encode_planar_code(std::span<const PlanarCodeEntry> entries)
{
    std::vector<std::uint8_t> out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
    for (const auto& e : entries) {
        if (e.order() == 0 || e.order() > 255)
            throw FormatError("planar_code: cannot encode n=" + std::to_string(e.order()) + " (supported 1..255)");
        out.push_back(static_cast<std::uint8_t>(e.order()));
        for (const auto& rot : e.rotations) {
            for (Vertex w : rot)
                out.push_back(static_cast<std::uint8_t>(w + 1));
            out.push_back(0);
        }
    }
    return out;
}

FileFormat sniff_format(std::string_view bytes)
{
    if (bytes.starts_with(kPlanarCodeHeader))
        return FileFormat::planar_code;
    return FileFormat::graph6;
}

}  // namespace exsq
