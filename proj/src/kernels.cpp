#include "mec/kernels.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mec/io.hpp"
#include "mec/matching.hpp"

namespace mec {

std::string_view to_string(KernelRule rule)
{
    switch (rule) {
    case KernelRule::standard:
        return "standard";
    case KernelRule::dual:
        return "dual";
    case KernelRule::c4free:
        return "c4free";
    }
    return "?";
}

KernelRule parse_kernel_rule(std::string_view text)
{
    if (text == "standard")
        return KernelRule::standard;
    if (text == "dual")
        return KernelRule::dual;
    if (text == "c4free")
        return KernelRule::c4free;
    throw InvalidInput("unknown kernel rule '" + std::string(text) + "'");
}

std::vector<NeighborhoodClass> neighborhood_classes(const Graph& g, std::span<const Vertex> cover)
{
    std::vector<char> in_cover(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex s : cover)
        in_cover.at(static_cast<std::size_t>(s)) = 1;
    std::map<std::vector<Vertex>, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (in_cover[static_cast<std::size_t>(v)])
            continue;
        std::vector<Vertex> nb = g.neighbors(v);
        for (Vertex x : nb)
            if (!in_cover[static_cast<std::size_t>(x)])
                throw InvalidInput("vertex set is not a vertex cover");
        classes[std::move(nb)].push_back(v);
    }
    std::vector<NeighborhoodClass> out;
    out.reserve(classes.size());
    for (auto& [t, members] : classes)
        out.push_back({t, std::move(members)});
    return out;
}

namespace {

// Shared tail of the standard and C4-free kernels: keep `survivors`
// (ascending), record every other vertex as removed.
KernelResult reduce_to(const Graph& g, int k, std::vector<Vertex> survivors, std::vector<Vertex> cover)
{
    std::sort(survivors.begin(), survivors.end());
    KernelResult r;
    r.verdict = KernelVerdict::reduced;
    r.graph = g.induced(survivors);
    r.parameter = k;
    r.threshold = k;
    r.cover = std::move(cover);
    r.lifting.original_vertices = g.num_vertices();
    std::vector<char> kept(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : survivors)
        kept[static_cast<std::size_t>(v)] = 1;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!kept[static_cast<std::size_t>(v)])
            r.lifting.steps.push_back({LiftStep::Kind::remove, v, -1, -1});
    r.lifting.origin = std::move(survivors);
    return r;
}

// Handles the forced verdicts; returns the cover on Continue.
std::optional<std::vector<Vertex>> preprocess_into(const Graph& g, int k, KernelResult& out)
{
    PreprocessResult pre = matching_preprocess(g, k);
    out.parameter = k;
    out.threshold = k;
    out.lifting.original_vertices = g.num_vertices();
    if (std::holds_alternative<preprocess::ForcedNo>(pre)) {
        out.verdict = KernelVerdict::forced_no;
        return std::nullopt;
    }
    if (auto* yes = std::get_if<preprocess::ForcedYes>(&pre)) {
        out.verdict = KernelVerdict::forced_yes;
        out.witness = std::move(yes->witness);
        return std::nullopt;
    }
    return std::move(std::get<preprocess::Continue>(pre).cover);
}

} // namespace

KernelResult kernelize_standard(const Graph& g, int k)
{
    KernelResult forced;
    auto cover = preprocess_into(g, k, forced);
    if (!cover)
        return forced;
    std::vector<Vertex> survivors = *cover;
    for (const NeighborhoodClass& cls : neighborhood_classes(g, *cover)) {
        const std::size_t keep = std::min(cls.members.size(), static_cast<std::size_t>(class_bound(cls.T.size())));
        survivors.insert(survivors.end(), cls.members.begin(), cls.members.begin() + static_cast<std::ptrdiff_t>(keep));
    }
    return reduce_to(g, k, std::move(survivors), std::move(*cover));
}

// ---------------------------------------------------------------------------

std::vector<R2Site> r2_sites(const Graph& g)
{
    std::vector<R2Site> out;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        if (g.degree(u) != 2)
            continue;
        for (Vertex v : g.neighbors(u)) {
            if (g.degree(v) != 2)
                continue;
            const std::vector<Vertex> nb = g.neighbors(v);
            const Vertex via = nb[0] == u ? nb[1] : nb[0];
            if (!g.has_edge(u, via))
                out.push_back({u, v, via});
        }
    }
    return out;
}

Graph apply_r2(const Graph& g, const R2Site& site)
{
    if (g.degree(site.u) != 2 || g.degree(site.v) != 2 || !g.has_edge(site.u, site.v) ||
        !g.has_edge(site.v, site.via) || site.via == site.u || g.has_edge(site.u, site.via))
        throw InvalidInput("not an R2 site");
    auto shift = [&](Vertex x) { return x > site.v ? x - 1 : x; };
    Graph h(g.num_vertices() - 1);
    for (const Edge& e : g.edges())
        if (e.u != site.v && e.v != site.v)
            h.add_edge(shift(e.u), shift(e.v));
    h.add_edge(shift(site.u), shift(site.via));
    return h;
}

namespace {

// Mutable graph in original ids used while the dual rules run.
class Workspace {
public:
    explicit Workspace(const Graph& g)
        : adj_(static_cast<std::size_t>(g.num_vertices())), alive_(static_cast<std::size_t>(g.num_vertices()), 1)
    {
        for (const Edge& e : g.edges())
            add(e.u, e.v);
    }

    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    const std::set<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool alive(Vertex v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
    bool adjacent(Vertex a, Vertex b) const { return adj_[static_cast<std::size_t>(a)].contains(b); }
    int size() const { return static_cast<int>(adj_.size()); }

    void add(Vertex a, Vertex b)
    {
        adj_[static_cast<std::size_t>(a)].insert(b);
        adj_[static_cast<std::size_t>(b)].insert(a);
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }

    void remove_vertex(Vertex v)
    {
        for (Vertex x : adj_[static_cast<std::size_t>(v)])
            adj_[static_cast<std::size_t>(x)].erase(v);
        adj_[static_cast<std::size_t>(v)].clear();
        alive_[static_cast<std::size_t>(v)] = 0;
    }

    // Surviving edges in creation order, renumbered onto the surviving vertices.
    Graph materialize(std::vector<Vertex>& origin) const
    {
        origin.clear();
        std::vector<Vertex> index(adj_.size(), -1);
        for (Vertex v = 0; v < size(); ++v)
            if (alive(v)) {
                index[static_cast<std::size_t>(v)] = static_cast<Vertex>(origin.size());
                origin.push_back(v);
            }
        Graph h(static_cast<int>(origin.size()));
        for (const Edge& e : edges_)
            if (alive(e.u) && alive(e.v) && adjacent(e.u, e.v) &&
                !h.has_edge(index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]))
                h.add_edge(index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]);
        return h;
    }

private:
    std::vector<std::set<Vertex>> adj_;
    std::vector<char> alive_;
    std::vector<Edge> edges_;
};

std::optional<R2Site> first_r2_site(const Workspace& w)
{
    for (Vertex u = 0; u < w.size(); ++u) {
        if (!w.alive(u) || w.degree(u) != 2)
            continue;
        for (Vertex v : w.neighbors(u)) {
            if (w.degree(v) != 2)
                continue;
            const auto& nb = w.neighbors(v);
            const Vertex via = *nb.begin() == u ? *nb.rbegin() : *nb.begin();
            if (!w.adjacent(u, via))
                return R2Site{u, v, via};
        }
    }
    return std::nullopt;
}

} // namespace

KernelResult kernelize_dual(const Graph& g, int k)
{
    if (k < 0)
        throw InvalidInput("deficit must be non-negative");
    KernelResult r;
    r.parameter = k;
    r.lifting.original_vertices = g.num_vertices();
    if (g.max_degree() > 3 * k + 6) {
        r.verdict = KernelVerdict::forced_no;
        r.threshold = g.num_vertices() - k;
        return r;
    }
    Workspace w(g);
    while (auto site = first_r2_site(w)) {
        w.remove_vertex(site->v);
        w.add(site->u, site->via);
        r.lifting.steps.push_back({LiftStep::Kind::contract, site->v, site->u, site->via});
    }
    // A triangle component contributes exactly three colors and three
    // vertices, so dropping it leaves the deficit unchanged.
    for (Vertex a = 0; a < w.size(); ++a) {
        if (!w.alive(a) || w.degree(a) != 2)
            continue;
        const Vertex b = *w.neighbors(a).begin();
        const Vertex c = *w.neighbors(a).rbegin();
        if (a < b && w.degree(b) == 2 && w.degree(c) == 2 && w.adjacent(b, c)) {
            w.remove_vertex(a);
            w.remove_vertex(b);
            w.remove_vertex(c);
            r.lifting.steps.push_back({LiftStep::Kind::triangle, a, b, c});
        }
    }
    r.verdict = KernelVerdict::reduced;
    r.graph = w.materialize(r.lifting.origin);
    // A non-positive target is met by any coloring; report it as 0.
    r.threshold = std::max(0, r.graph.num_vertices() - k);
    return r;
}

// ---------------------------------------------------------------------------

C4Found::C4Found(std::array<Vertex, 4> cycle)
    : Refusal("graph contains the 4-cycle " + std::to_string(cycle[0] + 1) + " " + std::to_string(cycle[1] + 1) +
              " " + std::to_string(cycle[2] + 1) + " " + std::to_string(cycle[3] + 1)),
      cycle_(cycle)
{
}

std::optional<std::array<Vertex, 4>> has_c4(const Graph& g)
{
    // Two distinct middles for the same neighbor pair close a 4-cycle.
    std::unordered_map<std::uint64_t, Vertex> middle;
    for (Vertex w = 0; w < g.num_vertices(); ++w) {
        const std::vector<Vertex> nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const std::uint64_t key = (static_cast<std::uint64_t>(nb[i]) << 32) | static_cast<std::uint32_t>(nb[j]);
                const auto [it, inserted] = middle.emplace(key, w);
                if (!inserted)
                    return std::array<Vertex, 4>{nb[i], it->second, nb[j], w};
            }
    }
    return std::nullopt;
}

KernelResult kernelize_c4free(const Graph& g, int k)
{
    if (auto cycle = has_c4(g))
        throw C4Found(*cycle);
    KernelResult forced;
    auto cover = preprocess_into(g, k, forced);
    if (!cover)
        return forced;
    std::vector<char> in_cover(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex s : *cover)
        in_cover[static_cast<std::size_t>(s)] = 1;
    std::vector<Vertex> survivors = *cover;
    for (Vertex s : *cover) {
        int private_kept = 0;
        for (Vertex x : g.neighbors(s)) {
            if (in_cover[static_cast<std::size_t>(x)])
                continue;
            if (g.degree(x) >= 2) // shared neighbor
                continue;
            if (private_kept < 2) {
                survivors.push_back(x);
                ++private_kept;
            }
        }
    }
    // Shared neighbors: every non-cover vertex of degree >= 2.
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!in_cover[static_cast<std::size_t>(v)] && g.degree(v) >= 2)
            survivors.push_back(v);
    KernelResult r = reduce_to(g, k, std::move(survivors), std::move(*cover));
    if (r.graph.num_vertices() > 2 * k * (2 * k + 2))
        throw std::logic_error("C4-free kernel exceeded its size bound");
    return r;
}

KernelResult kernelize(const Graph& g, int k, KernelRule rule)
{
    switch (rule) {
    case KernelRule::standard:
        return kernelize_standard(g, k);
    case KernelRule::dual:
        return kernelize_dual(g, k);
    case KernelRule::c4free:
        return kernelize_c4free(g, k);
    }
    throw InvalidInput("unknown kernel rule");
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t pair_key(Vertex a, Vertex b)
{
    if (a > b)
        std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

} // namespace

EdgeColoring lift_coloring(const Graph& original, const Lifting& lifting, const Graph& reduced,
                           const EdgeColoring& reduced_coloring)
{
    if (lifting.original_vertices != original.num_vertices())
        throw InvalidInput("lifting was computed for a different graph");
    if (static_cast<int>(lifting.origin.size()) != reduced.num_vertices())
        throw InvalidInput("lifting does not match the reduced graph");
    if (reduced_coloring.size() != reduced.num_edges())
        throw InvalidInput("coloring does not match the reduced graph");

    std::unordered_map<std::uint64_t, Color> current;
    Color next = 0;
    for (EdgeId e = 0; e < reduced.num_edges(); ++e) {
        const Vertex a = lifting.origin[static_cast<std::size_t>(reduced.edge(e).u)];
        const Vertex b = lifting.origin[static_cast<std::size_t>(reduced.edge(e).v)];
        current[pair_key(a, b)] = reduced_coloring[e];
        next = std::max(next, reduced_coloring[e] + 1);
    }

    std::map<std::vector<Vertex>, Vertex> twin_of;
    for (Vertex v : lifting.origin)
        twin_of.emplace(original.neighbors(v), v);

    auto take = [&](Vertex a, Vertex b) {
        const auto it = current.find(pair_key(a, b));
        if (it == current.end())
            throw InvalidInput("lifting refers to a missing edge " + std::to_string(a + 1) + " " +
                               std::to_string(b + 1));
        return it;
    };

    for (auto step = lifting.steps.rbegin(); step != lifting.steps.rend(); ++step) {
        switch (step->kind) {
        case LiftStep::Kind::contract: {
            const auto it = take(step->u, step->via);
            const Color x = it->second;
            current.erase(it);
            current[pair_key(step->v, step->via)] = x;
            current[pair_key(step->u, step->v)] = next++;
            break;
        }
        case LiftStep::Kind::triangle:
            current[pair_key(step->v, step->u)] = next++;
            current[pair_key(step->u, step->via)] = next++;
            current[pair_key(step->v, step->via)] = next++;
            break;
        case LiftStep::Kind::remove: {
            const std::vector<Vertex> nb = original.neighbors(step->v);
            if (nb.empty())
                break;
            const auto twin = twin_of.find(nb);
            if (twin == twin_of.end())
                throw InvalidInput("no surviving twin for removed vertex " + std::to_string(step->v + 1));
            for (Vertex y : nb)
                current[pair_key(step->v, y)] = take(twin->second, y)->second;
            break;
        }
        }
    }

    if (static_cast<int>(current.size()) != original.num_edges())
        throw InvalidInput("lifted edge set does not match the original graph");
    std::vector<Color> colors(static_cast<std::size_t>(original.num_edges()));
    for (EdgeId e = 0; e < original.num_edges(); ++e)
        colors[static_cast<std::size_t>(e)] = take(original.edge(e).u, original.edge(e).v)->second;
    return EdgeColoring(std::move(colors)).normalized();
}

std::string render_lifting(const Lifting& lifting)
{
    std::ostringstream os;
    os << "p lift " << lifting.original_vertices << ' ' << lifting.origin.size() << '\n';
    for (std::size_t i = 0; i < lifting.origin.size(); ++i)
        os << "map " << i + 1 << ' ' << lifting.origin[i] + 1 << '\n';
    for (const LiftStep& s : lifting.steps) {
        switch (s.kind) {
        case LiftStep::Kind::remove:
            os << "del " << s.v + 1 << '\n';
            break;
        case LiftStep::Kind::contract:
            os << "contract " << s.v + 1 << " into " << s.u + 1 << " via " << s.via + 1 << '\n';
            break;
        case LiftStep::Kind::triangle:
            os << "triangle " << s.v + 1 << ' ' << s.u + 1 << ' ' << s.via + 1 << '\n';
            break;
        }
    }
    return os.str();
}

Lifting load_lifting(std::string_view text)
{
    Lifting out;
    bool have_header = false;
    int reduced = 0;
    int last_line = 0;
    auto vertex = [&](const detail::Line& line, std::size_t i, int bound) {
        const int x = detail::parse_int(line, i);
        if (x < 1 || x > bound)
            throw ParseError(line.number, "vertex id out of range 1.." + std::to_string(bound));
        return x - 1;
    };
    for (const detail::Line& line : detail::tokenize(text)) {
        last_line = line.number;
        if (detail::is_comment(line))
            continue;
        const std::string_view kind = line.tokens.front();
        if (kind == "p") {
            if (have_header)
                throw ParseError(line.number, "second header line");
            detail::expect_tokens(line, 4);
            if (line.tokens[1] != "lift")
                throw ParseError(line.number, "expected 'p lift <n> <n_reduced>'");
            out.original_vertices = detail::parse_int(line, 2);
            reduced = detail::parse_int(line, 3);
            if (out.original_vertices < 0 || reduced < 0 || reduced > out.original_vertices)
                throw ParseError(line.number, "inconsistent sizes in header");
            out.origin.assign(static_cast<std::size_t>(reduced), -1);
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(line.number, "data before 'p lift' header");
        const int n = out.original_vertices;
        if (kind == "map") {
            detail::expect_tokens(line, 3);
            const int r = vertex(line, 1, reduced);
            out.origin[static_cast<std::size_t>(r)] = vertex(line, 2, n);
        } else if (kind == "del") {
            detail::expect_tokens(line, 2);
            out.steps.push_back({LiftStep::Kind::remove, vertex(line, 1, n), -1, -1});
        } else if (kind == "contract") {
            detail::expect_tokens(line, 6);
            if (line.tokens[2] != "into" || line.tokens[4] != "via")
                throw ParseError(line.number, "expected 'contract <v> into <u> via <v'>'");
            out.steps.push_back({LiftStep::Kind::contract, vertex(line, 1, n), vertex(line, 3, n), vertex(line, 5, n)});
        } else if (kind == "triangle") {
            detail::expect_tokens(line, 4);
            out.steps.push_back({LiftStep::Kind::triangle, vertex(line, 1, n), vertex(line, 2, n), vertex(line, 3, n)});
        } else {
            throw ParseError(line.number, "unknown line type '" + std::string(kind) + "'");
        }
    }
    if (!have_header)
        throw ParseError(last_line, "missing 'p lift' header");
    for (Vertex v : out.origin)
        if (v < 0)
            throw ParseError(last_line, "reduced vertex without a map line");
    return out;
}

} // namespace mec
