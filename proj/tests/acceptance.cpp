// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "mec/coloring.hpp"
#include "mec/generators.hpp"
#include "mec/kernels.hpp"
#include "mec/matching.hpp"
#include "mec/oracle.hpp"
#include "mec/solver.hpp"
#include "testkit.hpp"

using namespace mec;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

// Partition search up to 12 edges, the memoized sweep beyond.
int oracle_sigma(const Graph& g, const ValidityProfile& profile = ValidityProfile::uniform(2))
{
    if (g.num_edges() <= kDefaultEdgeLimit)
        return sigma_exact(g, profile).sigma;
    return sigma_frontier(g, profile).sigma;
}

constexpr int kSmallFamilyEdgeLimit = 15; // K6

SolverStats suite_stats;

bool solve_checked(const Graph& g, int k, Outcome& out, const char* where)
{
    SolveOptions opts;
    opts.stats = &suite_stats;
    const SolveResult r = solve_exact(g, k, opts);
    if (r.yes) {
        const VerifyReport report = verify_coloring(g, *r.witness);
        // k = 0 on a graph with edges: the single-color witness is the best possible.
        const bool size_ok = report.colors_used == k || (k == 0 && report.colors_used <= 1);
        if (!report.valid || !size_ok)
            out.fail(std::string(where) + ": witness does not verify with k=" + std::to_string(k));
    }
    return r.yes;
}

std::string describe(const Graph& g)
{
    return "n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges());
}

Outcome oracle_solver_equivalence()
{
    Outcome out;
    int checks = 0;
    for (const Graph& g : testkit::connected_family(6))
        for (int k = 0; k <= g.num_vertices(); ++k, ++checks)
            if (solve_checked(g, k, out, "exhaustive") !=
                sigma_threshold(g, k, ValidityProfile::uniform(2), kSmallFamilyEdgeLimit))
                out.fail("exhaustive " + describe(g) + " k=" + std::to_string(k));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = testkit::bounded_random_graph(seed, 2, 9, 12);
        for (int k = 0; k <= g.num_vertices(); ++k, ++checks)
            if (solve_checked(g, k, out, "random") != sigma_threshold(g, k))
                out.fail("random seed " + std::to_string(seed) + " k=" + std::to_string(k));
    }
    if (out.pass)
        out.detail = std::to_string(checks) + " (graph, k) pairs agree";
    return out;
}

Outcome two_factor_characterization()
{
    Outcome out;
    int factors = 0, graphs = 0;
    for (const Graph& g : testkit::connected_family(6)) {
        ++graphs;
        const bool full = oracle_sigma(g) == g.num_vertices();
        factors += is_two_factor(g);
        if (full != is_two_factor(g))
            out.fail(describe(g) + ": sigma=n is " + (full ? "true" : "false"));
    }
    if (out.pass)
        out.detail = std::to_string(graphs) + " graphs, " + std::to_string(factors) + " two-factors";
    return out;
}

Outcome matching_bound()
{
    Outcome out;
    int strict = 0;
    for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
        const Graph g = testkit::bounded_random_graph(seed, 2, 10, 12);
        const Matching mm = maximal_matching(g);
        const int sigma = oracle_sigma(g);
        const int need = mm.size() + (g.num_edges() > mm.size() ? 1 : 0);
        strict += g.num_edges() > mm.size();
        if (sigma < need)
            out.fail("seed " + std::to_string(seed) + ": sigma " + std::to_string(sigma) + " below " +
                     std::to_string(need));
        const EdgeColoring c = matching_coloring(g, mm);
        const VerifyReport report = verify_coloring(g, c);
        if (!report.valid || report.colors_used != need)
            out.fail("seed " + std::to_string(seed) + ": matching coloring invalid or wrong size");
    }
    if (out.pass)
        out.detail = "100 graphs, " + std::to_string(strict) + " with the +1 color";
    return out;
}

// Few hubs, many low-degree vertices: large neighborhood classes.
Graph hub_graph(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const int hubs = 1 + static_cast<int>(rng() % 3);
    const int leaves = 10 + static_cast<int>(rng() % 9);
    Graph g(hubs + leaves);
    for (int a = 0; a < hubs; ++a)
        for (int b = a + 1; b < hubs; ++b)
            if (rng() % 2)
                g.add_edge(a, b);
    for (int v = hubs; v < hubs + leaves; ++v) {
        // Two neighborhood patterns dominate so the classes overflow.
        const int pattern = static_cast<int>(rng() % 4);
        if (pattern < 2 || hubs == 1)
            g.add_edge(0, v);
        else if (pattern == 2)
            g.add_edge(1, v);
        else
            for (int a = 0; a < hubs; ++a)
                g.add_edge(a, v);
    }
    return g;
}

Outcome standard_kernel()
{
    Outcome out;
    int reduced = 0, shrunk = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const Graph g = i % 2 ? hub_graph(i) : testkit::bounded_random_graph(2000 + i, 3, 9, 12);
        const int k = 3 + static_cast<int>(i % 4 >= 2);
        const KernelResult kr = kernelize_standard(g, k);
        const bool before = oracle_sigma(g) >= k;
        const std::string tag = "instance " + std::to_string(i) + " (" + describe(g) + ", k=" + std::to_string(k) + ")";
        if (solve_checked(g, k, out, "original") != before)
            out.fail(tag + ": solver disagrees with oracle");
        if (kr.verdict == KernelVerdict::forced_no) {
            if (before)
                out.fail(tag + ": forced NO on a YES instance");
            continue;
        }
        if (kr.verdict == KernelVerdict::forced_yes) {
            if (!before || verify_coloring(g, *kr.witness).colors_used != k)
                out.fail(tag + ": forced YES is wrong");
            continue;
        }
        ++reduced;
        shrunk += kr.graph.num_vertices() < g.num_vertices();
        if ((oracle_sigma(kr.graph) >= k) != before)
            out.fail(tag + ": threshold changed by the kernel");
        if (solve_checked(kr.graph, k, out, "kernel") != before)
            out.fail(tag + ": solver on the kernel disagrees");
        const std::size_t s = kr.cover.size();
        for (const NeighborhoodClass& cls : neighborhood_classes(g, kr.cover)) {
            int kept = 0;
            for (Vertex v : cls.members)
                kept += std::find(kr.lifting.origin.begin(), kr.lifting.origin.end(), v) != kr.lifting.origin.end();
            if (kept > class_bound(cls.T.size()))
                out.fail(tag + ": class over its bound");
        }
        const double bound = static_cast<double>(s) + std::pow(2.0, static_cast<double>(s)) * class_bound(s);
        if (kr.graph.num_vertices() > bound)
            out.fail(tag + ": kernel larger than the vertex bound");
    }
    if (out.pass)
        out.detail = "50 instances, " + std::to_string(reduced) + " reduced, " + std::to_string(shrunk) + " shrunk";
    return out;
}

Graph boosted_two_factor(int k, std::uint64_t seed)
{
    const int degree = 3 * k + 7;
    Graph base = gen_two_factor(degree + 1, seed);
    // Vertex 0 gets every missing edge, pushing its degree to n-1.
    for (Vertex v = 1; v < base.num_vertices(); ++v)
        if (!base.has_edge(0, v))
            base.add_edge(0, v);
    return base;
}

Outcome dual_shift()
{
    Outcome out;
    int applied = 0;
    for (std::uint64_t seed = 3000; applied < 100; ++seed) {
        const Graph g = testkit::bounded_random_graph(seed, 3, 9, 12);
        const auto sites = r2_sites(g);
        if (sites.empty())
            continue;
        const R2Site site = sites[seed % sites.size()];
        const Graph h = apply_r2(g, site);
        ++applied;
        const int a = oracle_sigma(g), b = oracle_sigma(h);
        if (a != b + 1)
            out.fail("seed " + std::to_string(seed) + ": sigma " + std::to_string(a) + " vs reduced " +
                     std::to_string(b));
    }
    int boosted = 0;
    for (int k = 0; k <= 1; ++k)
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const Graph g = boosted_two_factor(k, seed);
            ++boosted;
            const KernelResult kr = kernelize_dual(g, k);
            if (kr.verdict != KernelVerdict::forced_no)
                out.fail("boosted two-factor k=" + std::to_string(k) + ": degree rule did not fire");
            if (oracle_sigma(g) >= g.num_vertices() - k)
                out.fail("boosted two-factor k=" + std::to_string(k) + ": oracle says YES");
        }
    if (out.pass)
        out.detail = std::to_string(applied) + " R2 applications, " + std::to_string(boosted) + " boosted instances";
    return out;
}

Outcome dual_linear()
{
    Outcome out;
    int instances = 0, worst_num = 0, worst_den = 1;
    for (int n : {12, 30, 60, 120, 240})
        for (int k = 1; k <= 8; ++k)
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                std::mt19937_64 rng(static_cast<std::uint64_t>(n * 1000 + k * 10) + seed);
                const Graph base = gen_two_factor(n, rng());
                std::vector<Vertex> order(static_cast<std::size_t>(n));
                std::iota(order.begin(), order.end(), 0);
                std::shuffle(order.begin(), order.end(), rng);
                const int deletions = static_cast<int>(rng() % static_cast<std::uint64_t>(k + 1));
                std::vector<Vertex> keep(order.begin() + deletions, order.end());
                std::sort(keep.begin(), keep.end());
                const Graph g = base.induced(keep);
                ++instances;
                const KernelResult kr = kernelize_dual(g, k);
                const std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                if (kr.verdict == KernelVerdict::forced_no) {
                    out.fail(tag + ": YES instance rejected");
                    continue;
                }
                if (kr.graph.num_vertices() > 150 * k)
                    out.fail(tag + ": kernel has " + std::to_string(kr.graph.num_vertices()) + " vertices");
                if (kr.graph.num_vertices() * worst_den > worst_num * k) {
                    worst_num = kr.graph.num_vertices();
                    worst_den = k;
                }
                if (n <= 30 && oracle_sigma(kr.graph) < kr.threshold)
                    out.fail(tag + ": reduced instance is not YES");
            }
    if (out.pass)
        out.detail = std::to_string(instances) + " planted instances, largest ratio " + std::to_string(worst_num) +
                     "/" + std::to_string(worst_den) + " vertices per unit of k";
    return out;
}

// Trees with extra leaves, plus the odd chord when it keeps the graph C4-free.
Graph c4free_instance(std::mt19937_64& rng)
{
    for (;;) {
        const int core = 2 + static_cast<int>(rng() % 4);
        const int leaves = 2 + static_cast<int>(rng() % 8);
        Graph g(core + leaves);
        for (Vertex v = 1; v < core; ++v)
            g.add_edge(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)), v);
        for (Vertex v = core; v < core + leaves; ++v)
            g.add_edge(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(core)), v);
        if (rng() % 3 == 0) {
            const Vertex a = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.num_vertices()));
            const Vertex b = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.num_vertices()));
            if (a != b && !g.has_edge(a, b))
                g.add_edge(a, b);
        }
        if (g.num_edges() <= 12 && !has_c4(g))
            return g;
    }
}

Outcome c4free_kernel()
{
    Outcome out;
    std::mt19937_64 rng(4000);
    int continued = 0;
    for (int i = 0; i < 50; ++i) {
        const Graph g = c4free_instance(rng);
        const int k = 3 + i % 3;
        const KernelResult kr = kernelize_c4free(g, k);
        const int sigma = oracle_sigma(g);
        const std::string tag = "instance " + std::to_string(i) + " (" + describe(g) + ", k=" + std::to_string(k) + ")";
        if (kr.verdict == KernelVerdict::forced_no) {
            if (sigma >= k)
                out.fail(tag + ": forced NO on a YES instance");
            continue;
        }
        if (kr.verdict == KernelVerdict::forced_yes) {
            if (sigma < k)
                out.fail(tag + ": forced YES on a NO instance");
            continue;
        }
        ++continued;
        if (oracle_sigma(kr.graph) != sigma)
            out.fail(tag + ": sigma changed by the kernel");
        if (kr.graph.num_vertices() > 2 * k * (2 * k + 2))
            out.fail(tag + ": kernel over 2k(2k+2) vertices");
    }
    if (continued == 0)
        out.fail("no instance reached the reduction rules");
    if (out.pass)
        out.detail = "50 instances, " + std::to_string(continued) + " reduced";
    return out;
}

Outcome hardness_reduction()
{
    Outcome out;
    int instances = 0, yes = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= std::min(2, n); ++k)
            for (const MCISInstance& inst : testkit::all_mcis_instances(n, k)) {
                ++instances;
                const bool truth = testkit::brute_mcis(inst);
                yes += truth;
                const AnnotatedGraph a = reduce_mcis(inst);
                const bool capacity_side =
                    sigma_frontier(a.graph, ValidityProfile::per_vertex(*a.f)).sigma >= *a.threshold;
                const PendantResult p = pendant_transform(a);
                const bool plain_side = sigma_frontier(p.graph).sigma >= p.threshold;
                std::ostringstream tag;
                tag << "n=" << n << " k=" << k << " m=" << inst.graph.num_edges();
                if (capacity_side != truth)
                    out.fail(tag.str() + ": capacity-profile threshold disagrees with brute force");
                if (plain_side != truth)
                    out.fail(tag.str() + ": pendant instance disagrees with brute force");
                if (has_c4(a.graph))
                    out.fail(tag.str() + ": reduced graph contains a 4-cycle");
            }
    if (out.pass)
        out.detail = std::to_string(instances) + " instances, " + std::to_string(yes) + " with an independent set";
    return out;
}

Outcome branching_discipline()
{
    Outcome out;
    if (suite_stats.max_top_width > 2)
        out.fail("top branching width " + std::to_string(suite_stats.max_top_width));
    if (suite_stats.max_across_width > 10)
        out.fail("across branching width " + std::to_string(suite_stats.max_across_width));
    if (suite_stats.palettes == 0)
        out.fail("the search never ran");
    if (out.pass)
        out.detail = "widths top " + std::to_string(suite_stats.max_top_width) + "/2, across " +
                     std::to_string(suite_stats.max_across_width) + "/10 over " +
                     std::to_string(suite_stats.palettes) + " palette guesses";
    return out;
}

} // namespace

int main()
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"oracle-solver equivalence", oracle_solver_equivalence},
        {"two-factor characterization", two_factor_characterization},
        {"matching bound", matching_bound},
        {"standard kernel", standard_kernel},
        {"dual kernel shift", dual_shift},
        {"dual kernel linear size", dual_linear},
        {"C4-free kernel", c4free_kernel},
        {"hardness reduction", hardness_reduction},
        {"branching discipline", branching_discipline},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = check();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d [%s]: %s (%s; %.1fs)\n", index, name, r.pass ? "PASS" : "FAIL", r.detail.c_str(),
                    secs);
        std::fflush(stdout);
        failed += !r.pass;
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
