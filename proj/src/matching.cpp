#include "mec/matching.hpp"

#include <algorithm>

namespace mec {

std::vector<Vertex> Matching::saturated(const Graph& g) const
{
    std::vector<Vertex> out;
    out.reserve(edges.size() * 2);
    for (EdgeId e : edges) {
        out.push_back(g.edge(e).u);
        out.push_back(g.edge(e).v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Matching maximal_matching(const Graph& g)
{
    Matching m;
    std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (used[static_cast<std::size_t>(ed.u)] || used[static_cast<std::size_t>(ed.v)])
            continue;
        used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = 1;
        m.edges.push_back(e);
    }
    return m;
}

EdgeColoring matching_coloring(const Graph& g, const Matching& m)
{
    // Unmatched edges share color 0; matched edges take 1..r.
    std::vector<Color> colors(static_cast<std::size_t>(g.num_edges()), 0);
    for (int i = 0; i < m.size(); ++i)
        colors[static_cast<std::size_t>(m.edges[static_cast<std::size_t>(i)])] = i + 1;
    return EdgeColoring(std::move(colors)).normalized();
}

PreprocessResult matching_preprocess(const Graph& g, int k)
{
    if (k < 0)
        throw InvalidInput("target color count must be non-negative");
    const int m = g.num_edges();
    if (m < k)
        return preprocess::ForcedNo{};
    if (k == 0)
        return preprocess::ForcedYes{EdgeColoring(std::vector<Color>(static_cast<std::size_t>(m), 0))};
    Matching matching = maximal_matching(g);
    if (matching.size() >= k - 1) {
        EdgeColoring witness = compress_colors(matching_coloring(g, matching), k);
        if (!verify_coloring(g, witness).valid || witness.colors_used() != k)
            throw std::logic_error("matching witness failed verification");
        return preprocess::ForcedYes{std::move(witness)};
    }
    std::vector<Vertex> cover = matching.saturated(g);
    return preprocess::Continue{std::move(matching), std::move(cover)};
}

namespace {

bool augment(int a, const std::vector<std::vector<std::pair<int, int>>>& adj, std::vector<int>& left_mate,
             std::vector<int>& right_mate, std::vector<int>& via, std::vector<char>& seen)
{
    for (const auto& [b, idx] : adj[static_cast<std::size_t>(a)]) {
        if (seen[static_cast<std::size_t>(b)])
            continue;
        seen[static_cast<std::size_t>(b)] = 1;
        const int owner = right_mate[static_cast<std::size_t>(b)];
        if (owner < 0 || augment(owner, adj, left_mate, right_mate, via, seen)) {
            left_mate[static_cast<std::size_t>(a)] = b;
            right_mate[static_cast<std::size_t>(b)] = a;
            via[static_cast<std::size_t>(a)] = idx;
            return true;
        }
    }
    return false;
}

} // namespace

BipartiteMatching max_bipartite_matching(const BipartiteGraph& b)
{
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(b.left));
    for (int i = 0; i < static_cast<int>(b.edges.size()); ++i) {
        const auto [a, r] = b.edges[static_cast<std::size_t>(i)];
        if (a < 0 || a >= b.left || r < 0 || r >= b.right)
            throw InvalidInput("bipartite edge endpoint out of range");
        adj[static_cast<std::size_t>(a)].emplace_back(r, i);
    }
    BipartiteMatching out;
    out.left_mate.assign(static_cast<std::size_t>(b.left), -1);
    out.right_mate.assign(static_cast<std::size_t>(b.right), -1);
    std::vector<int> via(static_cast<std::size_t>(b.left), -1);
    std::vector<char> seen;
    for (int a = 0; a < b.left; ++a) {
        seen.assign(static_cast<std::size_t>(b.right), 0);
        augment(a, adj, out.left_mate, out.right_mate, via, seen);
    }
    for (int a = 0; a < b.left; ++a)
        if (out.left_mate[static_cast<std::size_t>(a)] >= 0)
            out.edges.push_back(via[static_cast<std::size_t>(a)]);
    return out;
}

} // namespace mec
