#include "mec/coloring.hpp"

#include <algorithm>
#include <map>

namespace mec {

EdgeColoring::EdgeColoring(std::vector<Color> colors)
    : colors_(std::move(colors))
{
    for (Color x : colors_)
        if (x < 0)
            throw InvalidInput("negative color index");
}

int EdgeColoring::colors_used() const
{
    std::vector<Color> sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

EdgeColoring EdgeColoring::normalized() const
{
    std::vector<Color> sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Color> out(colors_.size());
    for (std::size_t i = 0; i < colors_.size(); ++i)
        out[i] = static_cast<Color>(std::lower_bound(sorted.begin(), sorted.end(), colors_[i]) - sorted.begin());
    return EdgeColoring(std::move(out));
}

ValidityProfile ValidityProfile::uniform(int q)
{
    if (q < 1)
        throw InvalidInput("palette capacity must be positive");
    ValidityProfile p;
    p.q_ = q;
    return p;
}

ValidityProfile ValidityProfile::per_vertex(std::vector<int> f)
{
    for (int x : f)
        if (x != 1 && x != 2)
            throw InvalidInput("f-values must be 1 or 2");
    ValidityProfile p;
    p.q_ = 2;
    p.f_ = std::move(f);
    return p;
}

void ValidityProfile::check_covers(int n) const
{
    if (f_ && static_cast<int>(f_->size()) != n)
        throw InvalidInput("f-map covers " + std::to_string(f_->size()) + " vertices, graph has " +
                           std::to_string(n));
}

std::vector<Color> palette(const Graph& g, const EdgeColoring& c, Vertex v)
{
    std::vector<Color> out;
    for (EdgeId e : g.incident(v))
        out.push_back(c[e]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VerifyReport verify_coloring(const Graph& g, const EdgeColoring& c, const ValidityProfile& profile)
{
    if (c.size() != g.num_edges())
        throw InvalidInput("coloring covers " + std::to_string(c.size()) + " edges, graph has " +
                           std::to_string(g.num_edges()));
    profile.check_covers(g.num_vertices());
    VerifyReport report;
    report.colors_used = c.colors_used();
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (static_cast<int>(palette(g, c, v).size()) > profile.capacity(v))
            report.violations.push_back(v);
    report.valid = report.violations.empty();
    return report;
}

Graph character_subgraph(const Graph& g, const EdgeColoring& c)
{
    if (!verify_coloring(g, c).valid)
        throw InvalidInput("character subgraph needs a 2-valid coloring");
    std::map<Color, EdgeId> representative;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        representative.emplace(c[e], e); // first insertion is the lowest id
    std::vector<EdgeId> picked;
    for (const auto& [color, e] : representative)
        picked.push_back(e);
    std::sort(picked.begin(), picked.end());
    Graph h(g.num_vertices());
    for (EdgeId e : picked)
        h.add_edge(g.edge(e).u, g.edge(e).v);
    return h;
}

bool is_two_factor(const Graph& g)
{
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

EdgeColoring compress_colors(const EdgeColoring& c, int k)
{
    const int used = c.colors_used();
    if (used < k)
        throw InvalidInput("coloring uses " + std::to_string(used) + " colors, cannot compress to " +
                           std::to_string(k));
    if (k < 1) {
        if (c.size() > 0)
            throw InvalidInput("a nonempty edge set needs at least one color");
        return c;
    }
    std::vector<Color> out = c.normalized().colors();
    for (Color& x : out)
        x = std::min(x, k - 1);
    return EdgeColoring(std::move(out));
}

} // namespace mec
