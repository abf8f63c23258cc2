#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "exsq/coloring.hpp"
#include "exsq/formats.hpp"
#include "exsq/fullerene.hpp"
#include "exsq/gadgets.hpp"
#include "exsq/generators.hpp"
#include "exsq/planarity.hpp"

namespace exsq::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input = "-";
    std::string output = "-";
    std::string format;
    std::string to;
    std::string mode = "exact-square";
    int p = 0;
    int k = 0;
    int max_chi = 4;
    std::string report;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::string which = "all";
    std::string name;
    std::string family = "subcubic";
    std::size_t n = 10;
    std::size_t count = 1;
    bool witness = false;
    bool no_timing = false;
};

std::string read_input(const std::string& path, std::istream& in)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open input file '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

// Writes to -o/--output when given, otherwise to the report stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback)
    {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw UsageError("cannot open output file '" + path + "'");
            out_ = &file_;
        }
    }
    std::ostream& operator*() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

FileFormat resolve_format(const RunConfig& cfg, std::string_view bytes)
{
    if (cfg.format.empty())
        return sniff_format(bytes);
    if (cfg.format == "graph6")
        return FileFormat::graph6;
    if (cfg.format == "planar_code")
        return FileFormat::planar_code;
    throw UsageError("unknown format '" + cfg.format + "' (expected graph6 or planar_code)");
}

std::vector<Graph> read_graphs(const RunConfig& cfg, std::istream& in)
{
    const std::string bytes = read_input(cfg.input, in);
    if (resolve_format(cfg, bytes) == FileFormat::graph6)
        return decode_graph6_file(bytes);
    std::vector<Graph> out;
    for (const auto& entry : decode_planar_code(bytes))
        out.push_back(entry.graph());
    return out;
}

void write_graph(std::ostream& out, const Graph& g, const std::optional<Embedding>& embedding,
                 const std::string& format, bool& planar_header_written)
{
    if (format.empty() || format == "graph6") {
        out << encode_graph6(g) << '\n';
        return;
    }
    if (format != "planar_code")
        throw UsageError("unknown output format '" + format + "'");
    std::optional<Embedding> plane = embedding;
    if (!plane)
        plane = is_planar(g);
    if (!plane)
        throw UsageError("graph is not planar, so it has no planar_code form");
    const PlanarCodeEntry entry = plane->to_planar_code();
    auto bytes = encode_planar_code(std::span(&entry, 1));
    std::size_t skip = planar_header_written ? kPlanarCodeHeader.size() : 0;
    planar_header_written = true;
    out.write(reinterpret_cast<const char*>(bytes.data() + skip), static_cast<std::streamsize>(bytes.size() - skip));
}

template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& body)
{
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            body(i);
    };
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        work();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);
}

int cmd_power(const RunConfig& cfg, std::istream& in, std::ostream& out)
{
    if (cfg.p < 1)
        throw UsageError("--p must be at least 1");
    const auto graphs = read_graphs(cfg, in);
    Sink sink(cfg.output, out);
    for (const auto& g : graphs)
        *sink << encode_graph6(exact_power(g, cfg.p)) << '\n';
    return 0;
}

int cmd_chi(const RunConfig& cfg, std::istream& in, std::ostream& out)
{
    std::optional<ColoringMode> mode = parse_coloring_mode(cfg.mode);
    std::string label = cfg.mode;
    if (!mode) {
        if (cfg.mode != "exact-power")
            throw UsageError("unknown mode '" + cfg.mode + "' (proper, exact-square, injective, exact-power)");
        if (cfg.p < 1)
            throw UsageError("mode exact-power needs --p >= 1");
        label = "exact-power:" + std::to_string(cfg.p);
    } else if (cfg.p != 0) {
        throw UsageError("--p only applies to mode exact-power");
    }

    const auto graphs = read_graphs(cfg, in);
    std::vector<ChromaticResult> results(graphs.size());
    std::vector<std::string> problems(graphs.size());
    parallel_for(graphs.size(), cfg.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        const Graph h = mode ? conflict_graph(g, *mode) : exact_power(g, cfg.p);
        results[i] = chromatic_number(h);
        const auto check = mode ? validate_coloring(g, results[i].witness, *mode)
                                : validate_coloring(h, results[i].witness, ColoringMode::proper);
        if (!check.ok)
            problems[i] = "witness for graph " + std::to_string(i) + " failed validation";
    });
    for (const auto& p : problems)
        if (!p.empty())
            throw std::logic_error(p);

    Sink sink(cfg.output, out);
    *sink << "index\tn\tmode\tchi" << (cfg.witness ? "\twitness" : "") << '\n';
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        *sink << i << '\t' << graphs[i].order() << '\t' << label << '\t' << results[i].k;
        if (cfg.witness) {
            *sink << '\t';
            const auto& colors = results[i].witness.colors;
            for (std::size_t v = 0; v < colors.size(); ++v)
                *sink << (v ? "," : "") << colors[v];
        }
        *sink << '\n';
    }
    return 0;
}

int cmd_verify_fullerenes(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err)
{
    if (cfg.max_chi < 1)
        throw UsageError("--max-chi must be at least 1");
    const std::string bytes = read_input(cfg.input, in);
    if (resolve_format(cfg, bytes) != FileFormat::planar_code)
        throw UsageError("verify-fullerenes reads planar_code input");
    const auto entries = decode_planar_code(bytes);
    const BatchReport report = verify_batch(entries, cfg.max_chi, cfg.workers);
    Sink sink(cfg.report.empty() ? cfg.output : cfg.report, out);
    *sink << batch_report_json_lines(report, !cfg.no_timing);
    err << "verify-fullerenes: " << report.entries.size() << " entries, " << report.passed() << " passed, "
        << report.entries.size() - report.passed() << " failed (max chi " << cfg.max_chi << ")\n";
    for (const auto& e : report.entries)
        if (!e.pass)
            err << "  entry " << e.index << " (n=" << e.n << ") failed"
                << (e.fullerene ? "" : ": not a fullerene") << (e.error.empty() ? "" : ": " + e.error) << '\n';
    return report.all_passed() ? 0 : 1;
}

int cmd_make_drum(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.k < 1)
        throw UsageError("drum parameter k must be at least 1");
    const Embedding drum = make_drum(cfg.k);
    Sink sink(cfg.output, out);
    bool header = false;
    write_graph(*sink, drum.graph(), drum, cfg.format, header);
    return 0;
}

int cmd_make_tube(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.p < 3 || cfg.k < 1)
        throw UsageError("make-tube needs a polygon of at least 3 sides and at least one ring");
    const Embedding tube = make_tube(cfg.p, cfg.k);
    Sink sink(cfg.output, out);
    bool header = false;
    write_graph(*sink, tube.graph(), tube, cfg.format, header);
    return 0;
}

int cmd_gadget(const RunConfig& cfg, std::ostream& out)
{
    const Gadget g = build(cfg.name);
    Sink sink(cfg.output, out);
    bool header = false;
    write_graph(*sink, g.graph, g.embedding, cfg.format, header);
    return 0;
}

int cmd_verify_lemmas(const RunConfig& cfg, std::ostream& out)
{
    const std::string& w = cfg.which;
    if (w != "all" && w != "wheel" && w != "triangulation" && w != "gadgets")
        throw UsageError("--which must be wheel, triangulation, gadgets or all");
    std::vector<VerificationReport> reports;
    ListLemmaOptions options;
    options.workers = cfg.workers;
    if (w == "all" || w == "gadgets")
        reports.push_back(verify_gadget_lemmas());
    if (w == "all" || w == "wheel")
        reports.push_back(verify_lemma_wheel(options));
    if (w == "all" || w == "triangulation")
        reports.push_back(verify_lemma_triangulation(options));
    bool ok = true;
    for (const auto& r : reports) {
        for (const auto& line : r.records)
            out << line << '\n';
        out << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " classes=" << r.classes << " failures=" << r.failures;
        if (!cfg.no_timing)
            out << " seconds=" << r.seconds;
        out << '\n';
        if (!r.ok())
            out << r.name << ": first failure " << r.witness << '\n';
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

int cmd_convert(const RunConfig& cfg, std::istream& in, std::ostream& out)
{
    if (cfg.to != "graph6" && cfg.to != "planar_code")
        throw UsageError("--to must be graph6 or planar_code");
    const std::string bytes = read_input(cfg.input, in);
    Sink sink(cfg.output, out);
    bool header = false;
    if (resolve_format(cfg, bytes) == FileFormat::planar_code) {
        const auto entries = decode_planar_code(bytes);
        if (cfg.to == "planar_code") {
            auto again = encode_planar_code(entries);
            (*sink).write(reinterpret_cast<const char*>(again.data()), static_cast<std::streamsize>(again.size()));
            return 0;
        }
        for (const auto& e : entries)
            *sink << encode_graph6(e.graph()) << '\n';
        return 0;
    }
    const auto graphs = decode_graph6_file(bytes);
    if (cfg.to == "planar_code" && graphs.empty()) {
        (*sink) << kPlanarCodeHeader;
        return 0;
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        try {
            write_graph(*sink, graphs[i], std::nullopt, cfg.to, header);
        } catch (const UsageError& e) {
            throw UsageError("graph " + std::to_string(i) + ": " + e.what());
        }
    }
    return 0;
}

int cmd_random(const RunConfig& cfg, std::ostream& out)
{
    Rng rng(cfg.seed);
    Sink sink(cfg.output, out);
    for (std::size_t i = 0; i < cfg.count; ++i) {
        Graph g;
        if (cfg.family == "subcubic")
            g = random_connected_subcubic(cfg.n, cfg.n, rng);
        else if (cfg.family == "honeycomb")
            g = random_honeycomb_patch(cfg.n, rng);
        else if (cfg.family == "tree")
            g = random_subcubic_tree(cfg.n, rng);
        else if (cfg.family == "series-parallel")
            g = random_series_parallel_subcubic(cfg.n, rng);
        else if (cfg.family == "gnp")
            g = random_graph(cfg.n, 0.3, rng);
        else
            throw UsageError("unknown family '" + cfg.family +
                             "' (subcubic, honeycomb, tree, series-parallel, gnp)");
        *sink << encode_graph6(g) << '\n';
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact distance-power colorings, fullerene drums and gadget verification"};
    app.name("exsq");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    auto input = [&](CLI::App* sub) {
        sub->add_option("-i,--input", cfg.input, "Input file, '-' for standard input")->capture_default_str();
        sub->add_option("--format", cfg.format, "Input format: graph6 or planar_code (detected when omitted)");
    };
    auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "Output file, '-' for standard output"); };
    auto workers = [&](CLI::App* sub) {
        sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1U, 256U))->capture_default_str();
    };

    auto* power = app.add_subcommand("power", "Exact distance-p power of each input graph, as graph6");
    input(power);
    output(power);
    power->add_option("--p", cfg.p, "Distance p >= 1")->required();

    auto* chi = app.add_subcommand("chi", "Chromatic number of the chosen conflict graph");
    input(chi);
    output(chi);
    workers(chi);
    chi->add_option("--mode", cfg.mode, "proper, exact-square, injective or exact-power")->capture_default_str();
    chi->add_option("--p", cfg.p, "Distance for mode exact-power");
    chi->add_flag("--witness", cfg.witness, "Append an optimal coloring per graph");

    auto* fullerenes = app.add_subcommand("verify-fullerenes", "Batch check of planar_code fullerenes");
    input(fullerenes);
    output(fullerenes);
    workers(fullerenes);
    fullerenes->add_option("--max-chi", cfg.max_chi, "Palette bound each entry must meet")->capture_default_str();
    fullerenes->add_option("--report", cfg.report, "Write the JSON lines report here");
    fullerenes->add_flag("--no-timing", cfg.no_timing, "Leave the timing field out of the report");

    auto* drum = app.add_subcommand("make-drum", "Emit the k-drum");
    drum->add_option("k", cfg.k, "Drum parameter k >= 1")->required();
    drum->add_option("--format", cfg.format, "graph6 (default) or planar_code");
    output(drum);

    auto* tube = app.add_subcommand("make-tube", "Emit a tube: central polygon, rings of hexagons, outer polygon");
    tube->add_option("polygon", cfg.p, "Polygon size (5 or 6 give fullerenes)")->required();
    tube->add_option("rings", cfg.k, "Number of rings")->required();
    tube->add_option("--format", cfg.format, "graph6 (default) or planar_code");
    output(tube);

    auto* gadget = app.add_subcommand("gadget", "Emit a named gadget graph");
    gadget->add_option("name", cfg.name, "Gadget name, e.g. heawood or star(5)")->required();
    gadget->add_option("--format", cfg.format, "graph6 (default) or planar_code");
    output(gadget);

    auto* lemmas = app.add_subcommand("verify-lemmas", "Exhaustive gadget and list-coloring checks");
    lemmas->add_option("--which", cfg.which, "wheel, triangulation, gadgets or all")->capture_default_str();
    lemmas->add_flag("--no-timing", cfg.no_timing, "Omit wall-clock times");
    workers(lemmas);

    auto* convert = app.add_subcommand("convert", "Convert between graph6 and planar_code");
    input(convert);
    output(convert);
    convert->add_option("--to", cfg.to, "graph6 or planar_code")->required();

    auto* random = app.add_subcommand("random", "Seeded random graphs as graph6");
    random->add_option("--family", cfg.family, "subcubic, honeycomb, tree, series-parallel or gnp")->capture_default_str();
    random->add_option("--n", cfg.n, "Size parameter")->capture_default_str();
    random->add_option("--count", cfg.count, "How many graphs")->capture_default_str();
    random->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    output(random);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (power->parsed()) return cmd_power(cfg, in, out);
        if (chi->parsed()) return cmd_chi(cfg, in, out);
        if (fullerenes->parsed()) return cmd_verify_fullerenes(cfg, in, out, err);
        if (drum->parsed()) return cmd_make_drum(cfg, out);
        if (tube->parsed()) return cmd_make_tube(cfg, out);
        if (gadget->parsed()) return cmd_gadget(cfg, out);
        if (lemmas->parsed()) return cmd_verify_lemmas(cfg, out);
        if (convert->parsed()) return cmd_convert(cfg, in, out);
        if (random->parsed()) return cmd_random(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace exsq::cli
