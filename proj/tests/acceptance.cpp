// Acceptance run: one PASS/FAIL line per criterion. Expected values and time
// limits are fixed below; a criterion fails if any check or its limit fails.
//
// Usage: acceptance [extra-fullerenes.pc]
// An extra planar_code file (or EXSQ_EXTRA_FULLERENES) is added to the
// fullerene batch of criterion 10.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "exsq/coloring.hpp"
#include "exsq/formats.hpp"
#include "exsq/fullerene.hpp"
#include "exsq/gadgets.hpp"
#include "exsq/generators.hpp"
#include "exsq/planarity.hpp"
#include "oracles.hpp"

using namespace exsq;

namespace {

class Criterion {
public:
    explicit Criterion(std::string* log) : log_(log) {}

    void check(bool ok, const std::string& what)
    {
        if (!ok) {
            ok_ = false;
            *log_ += "    failed: " + what + "\n";
        }
    }
    void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
    bool ok() const { return ok_; }
    const std::string& notes() const { return notes_; }

private:
    std::string* log_;
    std::string notes_;
    bool ok_ = true;
};

struct Outcome {
    int failed = 0;
};

void run_criterion(Outcome& outcome, int id, const char* title, double limit_seconds,
                   const std::function<void(Criterion&)>& body)
{
    std::string log;
    Criterion c(&log);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, limit_seconds);
    c.check(secs <= limit_seconds, std::string("time ") + timing);
    const bool pass = c.ok();
    if (!pass)
        ++outcome.failed;
    std::printf("AC%-2d %s  %s (%s)%s%s\n", id, pass ? "PASS" : "FAIL", title, timing,
                c.notes().empty() ? "" : ": ", c.notes().c_str());
    std::fputs(log.c_str(), stdout);
    std::fflush(stdout);
}

std::string str(std::size_t x)
{
    return std::to_string(x);
}

Graph sq(const Graph& g)
{
    return exact_power(g, 2);
}

bool is_subcubic_connected(const Graph& g)
{
    return is_connected(g) && g.max_degree() <= 3;
}

struct Fixture {
    std::string name;
    Graph graph;
};

std::vector<Fixture> subcubic_suite()
{
    std::vector<Fixture> out;
    for (const char* name : {"heawood", "petersen", "triplex", "bip22", "theta", "outerplanar_fig4", "fig6a",
                             "fig6b", "fig7", "fig8", "fig9", "dodecahedron", "c60", "drum_cap"})
        out.push_back({name, build(name).graph});
    for (int t = 1; t <= 3; ++t)
        out.push_back({"star(" + std::to_string(t) + ")", build(GadgetId{"star", t}).graph});
    for (int k = 1; k <= 6; ++k)
        out.push_back({"drum(" + std::to_string(k) + ")", make_drum(k).graph()});
    Rng rng(2024);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 6 + rng() % 40;
        out.push_back({"random-subcubic#" + std::to_string(i), random_connected_subcubic(n, rng() % (n / 2 + 1), rng)});
    }
    return out;
}

std::vector<Fixture> bipartite_planar_suite(bool outerplanar_only)
{
    std::vector<Fixture> out;
    Rng rng(77);
    for (std::size_t len = 2; len <= 8; ++len)
        out.push_back({"ladder(" + str(len) + ")", ladder(len)});
    for (std::size_t h = 1; h <= 6; ++h)
        out.push_back({"hexagon-chain(" + str(h) + ")", hexagon_chain(h)});
    for (int i = 0; i < 12; ++i)
        out.push_back({"tree#" + std::to_string(i), random_subcubic_tree(4 + rng() % 30, rng)});
    out.push_back({"C8", oracle::cycle(8)});
    out.push_back({"C12", oracle::cycle(12)});
    if (!outerplanar_only) {
        out.push_back({"cube", oracle::cube()});
        for (int i = 0; i < 20; ++i)
            out.push_back({"honeycomb#" + std::to_string(i), random_honeycomb_patch(6 + rng() % 60, rng)});
    }
    return out;
}

std::vector<PlanarCodeEntry> read_planar_code_file(const std::string& path)
{
    const std::string bytes = oracle::read_file(path);
    if (bytes.empty())
        throw std::runtime_error("cannot read " + path);
    return decode_planar_code(bytes);
}

}  // namespace

int main(int argc, char** argv)
{
    std::string extra_path;
    if (argc > 1)
        extra_path = argv[1];
    else if (const char* env = std::getenv("EXSQ_EXTRA_FULLERENES"))
        extra_path = env;

    Outcome outcome;

    run_criterion(outcome, 1, "extremal gadget table", 10, [](Criterion& c) {
        const Graph h = sq(build("heawood").graph);
        const int chi_h = exact_square_chromatic(build("heawood").graph).k;
        c.check(chi_h == 7, "heawood chi = " + std::to_string(chi_h) + ", expected 7");
        const auto comps = connected_components(h);
        bool two_k7 = comps.size() == 2;
        for (const auto& comp : comps)
            two_k7 = two_k7 && induced_subgraph(h, comp) == oracle::complete(7);
        c.check(two_k7, "heawood exact square is not two disjoint K7");

        const Graph t = sq(build("triplex").graph);
        const std::size_t omega_t = max_clique(t).size;
        const int chi_t = chromatic_number(t).k;
        c.check(omega_t == 6, "triplex omega = " + str(omega_t) + ", expected 6");
        c.check(chi_t == 6, "triplex chi = " + std::to_string(chi_t) + ", expected 6");

        const Graph b = sq(build("bip22").graph);
        const std::size_t omega_b = max_clique(b).size;
        const int chi_b = chromatic_number(b).k;
        c.check(omega_b == 4, "bip22 omega = " + str(omega_b) + ", expected 4");
        c.check(chi_b == 6, "bip22 chi = " + std::to_string(chi_b) + ", expected 6");
        c.check(b.max_degree() == 6, "bip22 exact square max degree = " + std::to_string(b.max_degree()));
        c.note("heawood chi=" + std::to_string(chi_h) + ", triplex omega=" + str(omega_t) + " chi=" +
               std::to_string(chi_t) + ", bip22 omega=" + str(omega_b) + " chi=" + std::to_string(chi_b) +
               " maxdeg=" + std::to_string(b.max_degree()));
    });

    run_criterion(outcome, 2, "star family", 1, [](Criterion& c) {
        for (int t = 2; t <= 8; ++t) {
            const int chi = exact_square_chromatic(build(GadgetId{"star", t}).graph).k;
            c.check(chi == t, "star(" + std::to_string(t) + ") chi = " + std::to_string(chi));
        }
        c.note("chi(K_{1,t}) = t for t = 2..8");
    });

    run_criterion(outcome, 3, "clique bounds on subcubic graphs", 30, [](Criterion& c) {
        const auto suite = subcubic_suite();
        c.check(suite.size() >= 50, "suite has only " + str(suite.size()) + " graphs");
        std::size_t planar = 0;
        for (const auto& f : suite) {
            c.check(is_subcubic_connected(f.graph), f.name + " is not connected subcubic");
            const std::size_t omega = max_clique(sq(f.graph)).size;
            c.check(omega <= 7, f.name + " omega = " + str(omega));
            c.check((omega == 7) == (f.name == "heawood"), f.name + " omega = " + str(omega));
            if (is_planar(f.graph)) {
                ++planar;
                c.check(omega <= 4, f.name + " is planar with omega = " + str(omega));
            }
        }
        const Graph th = sq(build("theta").graph);
        const auto first = max_clique(th);
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < static_cast<Vertex>(th.order()); ++v)
            if (std::find(first.witness.begin(), first.witness.end(), v) == first.witness.end())
                rest.push_back(v);
        const auto second = max_clique(induced_subgraph(th, rest));
        c.check(first.size == 4 && second.size == 4, "theta lacks two disjoint K4 in its exact square");
        c.note(str(suite.size()) + " graphs, " + str(planar) + " planar, theta has two disjoint K4");
    });

    run_criterion(outcome, 4, "bipartite subcubic planar structure", 60, [](Criterion& c) {
        const auto suite = bipartite_planar_suite(false);
        const auto outer_suite = bipartite_planar_suite(true);
        c.check(suite.size() >= 25, "suite has only " + str(suite.size()) + " graphs");
        std::size_t outer = 0;
        for (const auto& f : suite) {
            c.check(is_subcubic_connected(f.graph) && bipartition(f.graph) && is_planar(f.graph),
                    f.name + " is not a connected bipartite subcubic planar graph");
            const Graph h = sq(f.graph);
            const auto comps = connected_components(h);
            c.check(comps.size() == 2, f.name + " exact square has " + str(comps.size()) + " components");
            const bool op = is_outerplanar(f.graph);
            for (const auto& comp : comps) {
                const Graph part = induced_subgraph(h, comp);
                c.check(is_planar(part).has_value(), f.name + " has a non-planar component");
                if (op)
                    c.check(is_outerplanar(part), f.name + " has a non-outerplanar component");
            }
            const int chi = chromatic_number(h).k;
            c.check(chi <= 4, f.name + " chi = " + std::to_string(chi));
            if (op) {
                ++outer;
                c.check(chi <= 3, f.name + " is outerplanar with chi = " + std::to_string(chi));
            }
        }
        c.check(outer >= outer_suite.size(), "outerplanar sub-suite shrank");
        c.note(str(suite.size()) + " graphs, " + str(outer) + " outerplanar");
    });

    run_criterion(outcome, 5, "K4-minor-free subcubic graphs", 120, [](Criterion& c) {
        Rng rng(505);
        int worst = 0;
        const int instances = 120;
        for (int i = 0; i < instances; ++i) {
            const Graph g = random_series_parallel_subcubic(5 + rng() % 40, rng);
            c.check(is_subcubic_connected(g), "instance " + std::to_string(i) + " is not connected subcubic");
            c.check(is_k4_minor_free(g), "instance " + std::to_string(i) + " has a K4 minor");
            const int chi = exact_square_chromatic(g).k;
            worst = std::max(worst, chi);
            c.check(chi <= 4, "instance " + std::to_string(i) + " chi = " + std::to_string(chi));
        }
        const Graph theta = build("theta").graph;
        c.check(is_k4_minor_free(theta), "theta has a K4 minor");
        c.check(exact_square_chromatic(theta).k == 4, "theta chi is not 4");
        c.note(std::to_string(instances) + " instances, max chi " + std::to_string(worst) + ", theta chi 4");
    });

    run_criterion(outcome, 6, "drums are exactly the 3-colorable fullerenes", 120, [](Criterion& c) {
        for (int k = 1; k <= 6; ++k) {
            const std::string tag = "drum(" + std::to_string(k) + ")";
            const Embedding e = make_drum(k);
            c.check(is_fullerene(e).verdict, tag + " is not a fullerene");
            c.check(e.graph().order() == static_cast<std::size_t>(12 * (k + 1)), tag + " has wrong order");
            const auto cert = is_drum(e);
            c.check(cert && cert->k == k, tag + " not recognized with its k");
            if (cert)
                c.check(validate_coloring(e.graph(), drum_3_coloring(e, *cert), ColoringMode::exact_square).ok,
                        tag + " constructed coloring invalid");
            c.check(exact_square_chromatic(e.graph()).k == 3, tag + " chi is not 3");
            c.check(classify_3_colorability(e).consistent, tag + " classification inconsistent");
        }
        for (const char* name : {"dodecahedron", "c60"}) {
            const Embedding e = *build(name).embedding;
            c.check(is_fullerene(e).verdict, std::string(name) + " is not a fullerene");
            c.check(exact_square_chromatic(e.graph()).k == 4, std::string(name) + " chi is not 4");
            c.check(!is_drum(e).has_value(), std::string(name) + " has a drum certificate");
            c.check(classify_3_colorability(e).consistent, std::string(name) + " classification inconsistent");
        }
        c.note("drums k=1..6 chi 3, dodecahedron and C60 chi 4");
    });

    run_criterion(outcome, 7, "6-wheel list lemma", 60, [](Criterion& c) {
        const VerificationReport r = verify_lemma_wheel();
        c.check(r.failures == 0, str(r.failures) + " failing classes, first: " + r.witness);
        c.note(std::to_string(r.classes) + " classes, " + std::to_string(r.failures) + " failures");
    });

    run_criterion(outcome, 8, "12-vertex triangulation list lemma", 600, [](Criterion& c) {
        const VerificationReport r = verify_lemma_triangulation();
        c.check(r.failures == 0, str(r.failures) + " failing classes, first: " + r.witness);
        c.check(r.classes < 10'000'000, "classes = " + std::to_string(r.classes));
        c.note(std::to_string(r.classes) + " classes, " + std::to_string(r.failures) + " failures");
    });

    run_criterion(outcome, 9, "gadget lemmas", 60, [](Criterion& c) {
        for (const char* name : {"fig6a", "fig6b", "fig8", "fig9"})
            c.check(!is_k_colorable(sq(build(name).graph), 3).has_value(),
                    std::string(name) + " has an exact-square 3-coloring");
        const Gadget g = build("fig7");
        const Graph h = sq(g.graph);
        const auto any = is_k_colorable(h, 3);
        c.check(any && validate_coloring(g.graph, *any, ColoringMode::exact_square).ok, "fig7 not 3-colorable");
        std::vector<int> pre(h.order(), 0);
        pre[static_cast<std::size_t>(g.vertex("x"))] = 1;
        pre[static_cast<std::size_t>(g.vertex("y"))] = 1;
        c.check(!is_k_colorable(h, 3, pre).has_value(), "fig7 3-colorable with c(x) = c(y)");
        const VerificationReport r = verify_gadget_lemmas();
        c.check(r.ok(), "verify_gadget_lemmas reported " + std::to_string(r.failures) + " failures");
        c.note("fig6a, fig6b, fig8, fig9 unsat; fig7 sat, unsat with c(x)=c(y)");
    });

    run_criterion(outcome, 10, "fullerene batch at desk scale", 300, [&](Criterion& c) {
        auto entries = read_planar_code_file(oracle::data_path("fullerenes.pc"));
        const std::size_t bundled = entries.size();
        if (!extra_path.empty()) {
            auto extra = read_planar_code_file(extra_path);
            entries.insert(entries.end(), extra.begin(), extra.end());
        }
        const BatchReport r = verify_batch(entries, 4);
        for (const auto& e : r.entries) {
            c.check(e.fullerene, "entry " + str(e.index) + " is not a fullerene");
            c.check(e.chi && *e.chi <= 4, "entry " + str(e.index) + " chi above 4");
            c.check(e.consistent, "entry " + str(e.index) + " drum/3-colorability mismatch");
        }
        c.check(r.all_passed(), str(r.entries.size() - r.passed()) + " entries failed");

        // Throughput on n <= 60, replicated to a few hundred instances.
        std::vector<PlanarCodeEntry> small;
        for (const auto& e : entries)
            if (e.order() <= 60)
                small.push_back(e);
        std::vector<PlanarCodeEntry> load;
        while (load.size() < 500)
            load.insert(load.end(), small.begin(), small.end());
        const BatchReport t = verify_batch(load, 4);
        const double rate = static_cast<double>(load.size()) / std::max(t.seconds, 1e-9);
        c.check(t.all_passed(), "throughput run had failures");
        c.check(rate >= 50.0, "throughput " + std::to_string(rate) + " instances/s");
        char buf[160];
        std::snprintf(buf, sizeof buf, "%zu bundled + %zu extra entries, all chi <= 4; %.0f instances/s for n <= 60",
                      bundled, entries.size() - bundled, rate);
        c.note(buf);
    });

    run_criterion(outcome, 11, "oracle equivalence", 300, [](Criterion& c) {
        const auto graphs = decode_graph6_file(oracle::read_file(oracle::data_path("connected_upto8.g6")));
        c.check(graphs.size() == 12113, "fixture holds " + str(graphs.size()) + " graphs");
        std::size_t mismatches = 0;
        for (const Graph& g : graphs)
            for (int k = 2; k <= 4; ++k)
                if (is_k_colorable(g, k).has_value() != oracle::brute_colorable(g, k))
                    ++mismatches;
        c.check(mismatches == 0, str(mismatches) + " colorability mismatches");

        Rng rng(1111);
        std::size_t power_mismatches = 0;
        for (int i = 0; i < 1000; ++i) {
            const std::size_t n = 1 + rng() % 40;
            const double p = static_cast<double>(1 + rng() % 30) / 100.0;
            const Graph g = random_graph(n, p, rng);
            const int power = 1 + static_cast<int>(rng() % 4);
            if (exact_power(g, power).edges() != oracle::exact_power_edges(g, power))
                ++power_mismatches;
        }
        c.check(power_mismatches == 0, str(power_mismatches) + " exact power mismatches");
        c.note(str(graphs.size()) + " graphs x k=2,3,4 agree; 1000 random exact powers agree");
    });

    std::printf("%d of 11 criteria failed\n", outcome.failed);
    return outcome.failed == 0 ? 0 : 1;
}
