#include "exsq/fullerene.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace exsq {

namespace {

// Rotate so the smallest vertex comes first, then pick the direction whose
// second vertex is smaller.
std::vector<Vertex> normalize_cycle(std::vector<Vertex> cyc)
{
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    if (cyc.size() > 2 && cyc[1] > cyc.back())
        std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
}

void short_cycles_from(const Graph& g, Vertex s, std::size_t max_len, std::vector<Vertex>& path,
                       std::vector<bool>& on_path, std::vector<std::vector<Vertex>>& out)
{
    const Vertex u = path.back();
    for (Vertex w : g.neighbors(u)) {
        if (w == s && path.size() >= 3 && path[1] < path.back()) {
            out.push_back(path);
            continue;
        }
        if (w <= s || on_path[static_cast<std::size_t>(w)] || path.size() == max_len)
            continue;
        on_path[static_cast<std::size_t>(w)] = true;
        path.push_back(w);
        short_cycles_from(g, s, max_len, path, on_path, out);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = false;
    }
}

// Faces across the edges of face f, in boundary order.
std::vector<int> face_ring(const Embedding& e, const FaceSet& fs, int f)
{
    const auto& walk = fs.faces[static_cast<std::size_t>(f)];
    std::vector<int> ring;
    for (std::size_t i = 0; i < walk.size(); ++i)
        ring.push_back(face_of(e, fs, walk[(i + 1) % walk.size()], walk[i]));
    return ring;
}

std::optional<std::array<int, 6>> pentagon_ring(const Embedding& e, const FaceSet& fs, int f)
{
    if (fs.lengths[static_cast<std::size_t>(f)] != 6)
        return std::nullopt;
    auto ring = face_ring(e, fs, f);
    std::sort(ring.begin(), ring.end());
    if (std::adjacent_find(ring.begin(), ring.end()) != ring.end())
        return std::nullopt;
    std::array<int, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) {
        if (ring[i] == f || fs.lengths[static_cast<std::size_t>(ring[i])] != 5)
            return std::nullopt;
        out[i] = ring[i];
    }
    return out;
}

bool disjoint(const std::array<int, 6>& a, const std::array<int, 6>& b)
{
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end())
            return false;
    return true;
}

int dual_distance(const Graph& dual, int from, int to)
{
    auto d = bfs_distances(dual, from)[static_cast<std::size_t>(to)];
    return d ? *d : -1;
}

// Colors every vertex whose distance-2 neighborhood already shows two of
// the three colors. Returns false on a vertex that sees all three.
bool propagate(const Graph& square, std::vector<int>& color)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < static_cast<Vertex>(square.order()); ++v) {
            auto vi = static_cast<std::size_t>(v);
            unsigned seen = 0;
            for (Vertex w : square.neighbors(v))
                if (int c = color[static_cast<std::size_t>(w)]; c != 0)
                    seen |= 1U << (c - 1);
            if (color[vi] != 0) {
                if (seen & (1U << (color[vi] - 1)))
                    return false;
                continue;
            }
            if (seen == 7)
                return false;
            if (std::popcount(seen) == 2) {
                color[vi] = std::countr_zero(~seen & 7U) + 1;
                changed = true;
            }
        }
    }
    return true;
}

}  // namespace

FullereneReport is_fullerene(const Embedding& e)
{
    const Graph& g = e.graph();
    FullereneReport r;
    r.is_cubic = g.order() > 0;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
        r.is_cubic = r.is_cubic && g.degree(v) == 3;

    const FaceSet fs = faces(e);
    for (int len : fs.lengths)
        ++r.face_census[len];
    r.pentagon_count = r.face_census.contains(5) ? r.face_census.at(5) : 0;
    r.hexagon_count = r.face_census.contains(6) ? r.face_census.at(6) : 0;
    r.girth = girth(g);

    std::set<std::vector<Vertex>> small_faces;
    for (const auto& f : fs.faces)
        if (f.size() <= 6)
            small_faces.insert(normalize_cycle(f));
    std::vector<std::vector<Vertex>> cycles;
    std::vector<Vertex> path;
    std::vector<bool> on_path(g.order(), false);
    for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
        path.assign(1, s);
        on_path[static_cast<std::size_t>(s)] = true;
        short_cycles_from(g, s, 6, path, on_path, cycles);
        on_path[static_cast<std::size_t>(s)] = false;
    }
    r.small_cycle_check = std::all_of(cycles.begin(), cycles.end(),
                                      [&](const auto& c) { return small_faces.contains(c); });

    const bool only_5_and_6 = r.pentagon_count + r.hexagon_count == static_cast<int>(fs.count());
    r.verdict = r.is_cubic && only_5_and_6 && r.pentagon_count == 12;
    return r;
}

Embedding make_tube(int p, int rings)
{
    if (p < 3)
        throw std::invalid_argument("tube polygon must have at least 3 sides");
    if (rings < 1)
        throw std::invalid_argument("tube needs at least one ring, got " + std::to_string(rings));
    const int ring_len = 2 * p;
    const int n = 2 * p + ring_len * rings;
    auto f = [&](int i) { return ((i % p) + p) % p; };
    auto z = [&](int j, int t) { return p + (j - 1) * ring_len + ((t % ring_len) + ring_len) % ring_len; };
    auto g = [&](int i) { return p + ring_len * rings + ((i % p) + p) % p; };

    Graph graph(static_cast<std::size_t>(n));
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
    for (int i = 0; i < p; ++i) {
        rot[static_cast<std::size_t>(f(i))] = {z(1, 2 * i), f(i + 1), f(i - 1)};
        rot[static_cast<std::size_t>(g(i))] = {g(i + 1), z(rings, 2 * i + 1), g(i - 1)};
    }
    for (int j = 1; j <= rings; ++j)
        for (int t = 0; t < ring_len; ++t) {
            auto& r = rot[static_cast<std::size_t>(z(j, t))];
            if (t % 2 == 0) {
                const int in = j == 1 ? f(t / 2) : z(j - 1, t + 1);
                r = {z(j, t + 1), in, z(j, t - 1)};
            } else {
                const int out = j == rings ? g((t - 1) / 2) : z(j + 1, t - 1);
                r = {out, z(j, t + 1), z(j, t - 1)};
            }
        }
    for (int v = 0; v < n; ++v)
        for (Vertex w : rot[static_cast<std::size_t>(v)])
            graph.add_edge(v, w);
    return Embedding(std::move(graph), std::move(rot));
}

Embedding make_drum(int k)
{
    if (k < 1)
        throw std::invalid_argument("drum parameter k must be at least 1, got " + std::to_string(k));
    return make_tube(6, k);
}

std::optional<DrumCertificate> is_drum(const Embedding& e)
{
    if (!is_fullerene(e).verdict)
        throw std::invalid_argument("is_drum expects a fullerene");
    const FaceSet fs = faces(e);
    std::vector<std::pair<int, std::array<int, 6>>> candidates;
    for (int f = 0; f < static_cast<int>(fs.count()); ++f)
        if (auto ring = pentagon_ring(e, fs, f))
            candidates.emplace_back(f, *ring);
    if (candidates.size() < 2)
        return std::nullopt;
    const Graph dual = dual_graph(e, fs);
    for (std::size_t a = 0; a < candidates.size(); ++a)
        for (std::size_t b = a + 1; b < candidates.size(); ++b) {
            if (!disjoint(candidates[a].second, candidates[b].second))
                continue;
            const int d = dual_distance(dual, candidates[a].first, candidates[b].first);
            if (d < 3)
                continue;
            return DrumCertificate{d - 2, candidates[a].first, candidates[b].first, candidates[a].second,
                                   candidates[b].second};
        }
    return std::nullopt;
}

Coloring drum_3_coloring(const Embedding& e, const DrumCertificate& cert)
{
    const FaceSet fs = faces(e);
    const auto faces_n = static_cast<int>(fs.count());
    auto bad = [](const std::string& why) { return std::invalid_argument("drum certificate rejected: " + why); };
    if (cert.F < 0 || cert.F >= faces_n || cert.F_prime < 0 || cert.F_prime >= faces_n || cert.F == cert.F_prime)
        throw bad("face id out of range");
    auto ring_f = pentagon_ring(e, fs, cert.F);
    auto ring_fp = pentagon_ring(e, fs, cert.F_prime);
    auto sorted = [](std::array<int, 6> a) {
        std::sort(a.begin(), a.end());
        return a;
    };
    if (!ring_f || *ring_f != sorted(cert.pentagons_F))
        throw bad("F is not a hexagon ringed by the listed pentagons");
    if (!ring_fp || *ring_fp != sorted(cert.pentagons_F_prime))
        throw bad("F' is not a hexagon ringed by the listed pentagons");
    if (!disjoint(*ring_f, *ring_fp))
        throw bad("pentagon sets overlap");
    if (dual_distance(dual_graph(e, fs), cert.F, cert.F_prime) != cert.k + 2)
        throw bad("facial distance does not match k");

    const Graph& g = e.graph();
    const Graph square = exact_power(g, 2);
    constexpr std::array<int, 6> pattern{1, 2, 3, 1, 2, 3};

    std::vector<int> base(g.order(), 0);
    const auto& walk_f = fs.faces[static_cast<std::size_t>(cert.F)];
    for (std::size_t i = 0; i < 6; ++i)
        base[static_cast<std::size_t>(walk_f[i])] = pattern[i];
    if (!propagate(square, base))
        throw std::runtime_error("drum coloring: conflict while propagating from F");

    auto finish = [&](const std::vector<int>& colors) -> std::optional<Coloring> {
        Coloring c{colors, 3};
        if (c.is_total() && validate_coloring(g, c, ColoringMode::exact_square).ok)
            return c;
        return std::nullopt;
    };
    if (auto c = finish(base))
        return *c;

    const auto& walk_fp = fs.faces[static_cast<std::size_t>(cert.F_prime)];
    for (int shift = 0; shift < 6; ++shift)
        for (bool mirror : {false, true}) {
            std::vector<int> trial = base;
            bool fits = true;
            for (int i = 0; i < 6 && fits; ++i) {
                const int idx = mirror ? ((shift - i) % 6 + 6) % 6 : (shift + i) % 6;
                int& slot = trial[static_cast<std::size_t>(walk_fp[static_cast<std::size_t>(i)])];
                if (slot != 0 && slot != pattern[static_cast<std::size_t>(idx)])
                    fits = false;
                slot = pattern[static_cast<std::size_t>(idx)];
            }
            if (fits && propagate(square, trial))
                if (auto c = finish(trial))
                    return *c;
        }
    throw std::runtime_error("drum coloring: propagation did not complete");
}

ThreeColorClassification classify_3_colorability(const Embedding& e)
{
    ThreeColorClassification r;
    r.is_drum = is_drum(e).has_value();
    r.solver_says_3 = is_k_colorable(exact_power(e.graph(), 2), 3).has_value();
    r.consistent = r.solver_says_3 == r.is_drum;
    return r;
}

std::size_t BatchReport::passed() const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const BatchEntry& b) { return b.pass; }));
}

namespace {

BatchEntry check_entry(const PlanarCodeEntry& entry, std::size_t index, int max_chi)
{
    BatchEntry out;
    out.index = index;
    out.n = entry.order();
    out.cap = max_chi + 1;
    try {
        const Embedding e = Embedding::from_planar_code(entry);
        out.fullerene = is_fullerene(e).verdict;
        const Graph square = exact_power(e.graph(), 2);
        if (auto r = chromatic_number_capped(square, out.cap))
            out.chi = r->k;
        if (out.fullerene) {
            auto cert = is_drum(e);
            if (cert)
                out.drum_k = cert->k;
            const bool three = out.chi ? *out.chi <= 3
                                       : (out.cap < 3 && is_k_colorable(square, 3).has_value());
            out.consistent = three == cert.has_value();
        }
        out.pass = out.fullerene && out.chi && *out.chi <= max_chi && out.consistent;
    } catch (const std::exception& ex) {
        out.error = ex.what();
        out.pass = false;
    }
    return out;
}

}  // namespace

BatchReport verify_batch(std::span<const PlanarCodeEntry> entries, int max_chi, unsigned workers)
{
    const auto start = std::chrono::steady_clock::now();
    BatchReport report;
    report.max_chi = max_chi;
    report.entries.resize(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++)
            report.entries[i] = check_entry(entries[i], i, max_chi);
    };
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, entries.size()))));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string batch_report_json_lines(const BatchReport& report, bool include_timing)
{
    using nlohmann::ordered_json;
    std::ostringstream out;
    std::map<std::string, int> histogram;
    std::size_t fullerenes = 0;
    for (const auto& b : report.entries) {
        ordered_json j;
        j["index"] = b.index;
        j["n"] = b.n;
        j["fullerene"] = b.fullerene;
        if (b.chi)
            j["chi_exact_square"] = *b.chi;
        else
            j["chi_exact_square"] = ">" + std::to_string(b.cap);
        j["drum_k"] = b.drum_k ? ordered_json(*b.drum_k) : ordered_json(nullptr);
        j["consistent"] = b.consistent;
        j["pass"] = b.pass;
        if (!b.error.empty())
            j["error"] = b.error;
        out << j.dump() << '\n';
        fullerenes += b.fullerene;
        ++histogram[j["chi_exact_square"].is_string() ? j["chi_exact_square"].get<std::string>()
                                                       : std::to_string(*b.chi)];
    }
    ordered_json s;
    s["summary"] = true;
    s["entries"] = report.entries.size();
    s["fullerenes"] = fullerenes;
    s["passed"] = report.passed();
    s["failed"] = report.entries.size() - report.passed();
    s["max_chi"] = report.max_chi;
    s["chi_histogram"] = histogram;
    if (include_timing)
        s["seconds"] = report.seconds;
    out << s.dump() << '\n';
    return out.str();
}

}  // namespace exsq
