#include "mec/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mec/generators.hpp"
#include "mec/io.hpp"
#include "mec/kernels.hpp"
#include "mec/matching.hpp"
#include "mec/oracle.hpp"
#include "mec/solver.hpp"

namespace mec::cli {

namespace {

class Session {
public:
    Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    std::string read(const std::string& path)
    {
        if (path == "-") {
            if (stdin_used_)
                throw InvalidInput("standard input can only be read once");
            stdin_used_ = true;
            std::ostringstream buf;
            buf << in_.rdbuf();
            return buf.str();
        }
        std::ifstream file(path, std::ios::binary);
        if (!file)
            throw InvalidInput("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        return buf.str();
    }

    // Writes `text` to `path`, or after the status line on stdout when no path was given.
    void emit(const std::string& path, const std::string& text)
    {
        if (path.empty() || path == "-") {
            out_ << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file || !(file << text))
            throw InvalidInput("cannot write '" + path + "'");
    }

    std::ostream& out() { return out_; }

private:
    std::istream& in_;
    std::ostream& out_;
    bool stdin_used_ = false;
};

int default_edge_limit()
{
    if (const char* env = std::getenv("MEC_EDGE_LIMIT")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0 || v > 1'000'000)
            throw InvalidInput("MEC_EDGE_LIMIT must be a non-negative integer");
        return static_cast<int>(v);
    }
    return kDefaultEdgeLimit;
}

ValidityProfile profile_for(const AnnotatedGraph& a, int q)
{
    if (a.f)
        return ValidityProfile::per_vertex(*a.f);
    return ValidityProfile::uniform(q);
}

std::string join_vertices(const std::vector<Vertex>& vs)
{
    std::string s;
    for (Vertex v : vs)
        s += ' ' + std::to_string(v + 1);
    return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact and kernelized maximum edge 2-coloring", "mec"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // solve
    auto* solve = app.add_subcommand("solve", "decide whether the graph has a 2-valid coloring with k colors");
    int solve_k = 0;
    bool solve_kernelize = false;
    int solve_threads = 1;
    std::string solve_out, solve_in;
    solve->add_option("--k", solve_k, "target color count")->required()->check(CLI::NonNegativeNumber);
    solve->add_flag("--kernelize", solve_kernelize, "run the standard kernel first and lift the witness");
    solve->add_option("--threads", solve_threads, "worker threads")->check(CLI::PositiveNumber);
    solve->add_option("-o,--output", solve_out, "witness coloring file");
    solve->add_option("graph", solve_in, "graph file or -")->required();

    // sigma
    auto* sigma = app.add_subcommand("sigma", "maximum number of colors by exhaustive search");
    int sigma_limit = -1;
    int sigma_q = 2;
    bool sigma_frontier_mode = false;
    std::string sigma_out, sigma_in;
    sigma->add_option("--edge-limit", sigma_limit, "refuse graphs with more edges (default 12 or MEC_EDGE_LIMIT)")
        ->check(CLI::NonNegativeNumber);
    sigma->add_option("--q", sigma_q, "palette capacity when the graph has no f lines")->check(CLI::PositiveNumber);
    sigma->add_flag("--frontier", sigma_frontier_mode, "use the memoized sweep instead of partition search");
    sigma->add_option("-o,--output", sigma_out, "witness coloring file");
    sigma->add_option("graph", sigma_in, "graph file or -")->required();

    // kernel
    auto* kernel = app.add_subcommand("kernel", "reduce an instance and write the lifting sidecar");
    std::string kernel_rule = "standard";
    int kernel_k = 0;
    std::string kernel_out, kernel_lift, kernel_in;
    kernel->add_option("--rule", kernel_rule, "standard | dual | c4free")
        ->check(CLI::IsMember({"standard", "dual", "c4free"}));
    kernel->add_option("--k", kernel_k, "parameter (deficit for the dual rule)")->required()->check(
        CLI::NonNegativeNumber);
    kernel->add_option("-o,--output", kernel_out, "reduced graph file (witness coloring when forced YES)");
    kernel->add_option("--lift", kernel_lift, "lifting sidecar file");
    kernel->add_option("graph", kernel_in, "graph file or -")->required();

    // lift
    auto* lift = app.add_subcommand("lift", "map a coloring of a reduced graph back onto the original");
    std::string lift_original, lift_reduced, lift_file, lift_coloring_path, lift_out;
    lift->add_option("original", lift_original, "original graph")->required();
    lift->add_option("reduced", lift_reduced, "reduced graph")->required();
    lift->add_option("lifting", lift_file, "lifting sidecar")->required();
    lift->add_option("coloring", lift_coloring_path, "coloring of the reduced graph")->required();
    lift->add_option("-o,--output", lift_out, "lifted coloring file");

    // verify
    auto* verify = app.add_subcommand("verify", "check a coloring against the palette capacity");
    int verify_q = 2;
    std::string verify_graph, verify_coloring_path;
    verify->add_option("--q", verify_q, "palette capacity when the graph has no f lines")->check(CLI::PositiveNumber);
    verify->add_option("graph", verify_graph, "graph file or -")->required();
    verify->add_option("coloring", verify_coloring_path, "coloring file or -")->required();

    // approx
    auto* approx = app.add_subcommand("approx", "matching coloring: r or r+1 colors for a maximal matching of size r");
    std::string approx_in, approx_out;
    approx->add_option("-o,--output", approx_out, "coloring file");
    approx->add_option("graph", approx_in, "graph file or -")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    std::string gen_out;
    gen->add_option("-o,--output", gen_out, "output file");
    auto* gen_random_cmd = gen->add_subcommand("random", "G(n,p) graph");
    int gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    gen_random_cmd->add_option("--n", gen_n, "vertices")->required()->check(CLI::NonNegativeNumber);
    gen_random_cmd->add_option("--p", gen_p, "edge probability")->check(CLI::Range(0.0, 1.0));
    gen_random_cmd->add_option("--seed", gen_seed, "seed");
    auto* gen_two = gen->add_subcommand("two-factor", "random disjoint union of cycles");
    gen_two->add_option("--n", gen_n, "vertices")->required()->check(CLI::Range(3, 1 << 24));
    gen_two->add_option("--seed", gen_seed, "seed");
    auto* gen_mcis = gen->add_subcommand("mcis", "capacity-annotated instance from a multi-colored independent set instance");
    std::string gen_mcis_in;
    bool gen_pendant = false;
    gen_mcis->add_option("instance", gen_mcis_in, "MCIS file or -")->required();
    gen_mcis->add_flag("--pendant", gen_pendant, "attach pendants and emit a plain graph");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    Session io(in, out);
    try {
        if (*solve) {
            const Graph g = load_graph(io.read(solve_in));
            SolveOptions opts;
            opts.threads = solve_threads;
            std::optional<EdgeColoring> witness;
            bool yes = false;
            if (solve_kernelize) {
                KernelResult kr = kernelize_standard(g, solve_k);
                if (kr.verdict == KernelVerdict::forced_yes) {
                    yes = true;
                    witness = std::move(kr.witness);
                } else if (kr.verdict == KernelVerdict::reduced) {
                    SolveResult r = solve_exact(kr.graph, kr.threshold, opts);
                    if (r.yes) {
                        yes = true;
                        witness = compress_colors(lift_coloring(g, kr.lifting, kr.graph, *r.witness), solve_k);
                    }
                }
            } else {
                SolveResult r = solve_exact(g, solve_k, opts);
                yes = r.yes;
                witness = std::move(r.witness);
            }
            if (!yes) {
                out << "NO\n";
                return no;
            }
            out << "YES k=" << solve_k << '\n';
            io.emit(solve_out, render_coloring(g, *witness));
            return ok;
        }
        if (*sigma) {
            const AnnotatedGraph a = load_annotated(io.read(sigma_in));
            const ValidityProfile profile = profile_for(a, sigma_q);
            const int limit = sigma_limit >= 0 ? sigma_limit : default_edge_limit();
            const SigmaResult r =
                sigma_frontier_mode ? sigma_frontier(a.graph, profile) : sigma_exact(a.graph, profile, limit);
            out << "sigma=" << r.sigma << '\n';
            if (!sigma_out.empty())
                io.emit(sigma_out, render_coloring(a.graph, r.witness));
            return ok;
        }
        if (*kernel) {
            const Graph g = load_graph(io.read(kernel_in));
            const KernelResult kr = kernelize(g, kernel_k, parse_kernel_rule(kernel_rule));
            switch (kr.verdict) {
            case KernelVerdict::forced_no:
                out << "NO\n";
                return no;
            case KernelVerdict::forced_yes:
                out << "YES k=" << kernel_k << '\n';
                if (!kernel_out.empty())
                    io.emit(kernel_out, render_coloring(g, *kr.witness));
                return ok;
            case KernelVerdict::reduced:
                break;
            }
            out << "REDUCED n=" << kr.graph.num_vertices() << " m=" << kr.graph.num_edges()
                << " k=" << kr.parameter << " threshold=" << kr.threshold << '\n';
            io.emit(kernel_out, render_graph(kr.graph, "threshold " + std::to_string(kr.threshold)));
            if (!kernel_lift.empty())
                io.emit(kernel_lift, render_lifting(kr.lifting));
            return ok;
        }
        if (*lift) {
            const Graph original = load_graph(io.read(lift_original));
            const Graph reduced = load_graph(io.read(lift_reduced));
            const Lifting lifting = load_lifting(io.read(lift_file));
            const EdgeColoring rc = load_coloring(reduced, io.read(lift_coloring_path));
            const EdgeColoring lifted = lift_coloring(original, lifting, reduced, rc);
            out << "LIFTED colors=" << lifted.colors_used() << '\n';
            io.emit(lift_out, render_coloring(original, lifted));
            return ok;
        }
        if (*verify) {
            const AnnotatedGraph a = load_annotated(io.read(verify_graph));
            const EdgeColoring c = load_coloring(a.graph, io.read(verify_coloring_path));
            const VerifyReport report = verify_coloring(a.graph, c, profile_for(a, verify_q));
            if (report.valid) {
                out << "VALID colors=" << report.colors_used << '\n';
                return ok;
            }
            out << "INVALID\n";
            out << "violations:" << join_vertices(report.violations) << '\n';
            return no;
        }
        if (*approx) {
            const Graph g = load_graph(io.read(approx_in));
            const EdgeColoring c = matching_coloring(g, maximal_matching(g));
            out << "APPROX colors=" << c.colors_used() << '\n';
            io.emit(approx_out, render_coloring(g, c));
            return ok;
        }
        if (*gen) {
            std::string text;
            if (*gen_random_cmd) {
                text = render_graph(gen_random(gen_n, gen_p, gen_seed));
            } else if (*gen_two) {
                text = render_graph(gen_two_factor(gen_n, gen_seed));
            } else {
                const AnnotatedGraph a = reduce_mcis(load_mcis(io.read(gen_mcis_in)));
                if (gen_pendant) {
                    const PendantResult p = pendant_transform(a);
                    text = render_graph(p.graph, "threshold " + std::to_string(p.threshold));
                } else {
                    text = render_annotated(a);
                }
            }
            io.emit(gen_out, text);
            return ok;
        }
    } catch (const Refusal& e) {
        err << "refused: " << e.what() << '\n';
        return refusal;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace mec::cli
