#include "mec/graph.hpp"

#include <algorithm>

namespace mec {

Graph::Graph(int n)
{
    if (n < 0)
        throw InvalidInput("negative vertex count");
    incident_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const Edge& e : edges)
        g.add_edge(e.u, e.v);
    return g;
}

EdgeId Graph::add_edge(Vertex a, Vertex b)
{
    const int n = num_vertices();
    if (a < 0 || b < 0 || a >= n || b >= n)
        throw InvalidInput("edge {" + std::to_string(a) + "," + std::to_string(b) + "} out of range for " +
                           std::to_string(n) + " vertices");
    if (a == b)
        throw InvalidInput("self-loop at vertex " + std::to_string(a));
    if (a > b)
        std::swap(a, b);
    const auto [it, inserted] = lookup_.emplace(key(a, b), num_edges());
    if (!inserted)
        throw InvalidInput("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    const EdgeId id = it->second;
    edges_.push_back({a, b});
    incident_[static_cast<std::size_t>(a)].push_back(id);
    incident_[static_cast<std::size_t>(b)].push_back(id);
    return id;
}

int Graph::max_degree() const
{
    int best = 0;
    for (const auto& inc : incident_)
        best = std::max(best, static_cast<int>(inc.size()));
    return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    out.reserve(incident(v).size());
    for (EdgeId e : incident(v))
        out.push_back(edges_[static_cast<std::size_t>(e)].other(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const
{
    if (a > b)
        std::swap(a, b);
    const auto it = lookup_.find(key(a, b));
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

Graph Graph::induced(std::span<const Vertex> keep) const
{
    std::vector<Vertex> index(static_cast<std::size_t>(num_vertices()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        index.at(static_cast<std::size_t>(keep[i])) = static_cast<Vertex>(i);
    Graph h(static_cast<int>(keep.size()));
    for (const Edge& e : edges_) {
        const Vertex a = index[static_cast<std::size_t>(e.u)];
        const Vertex b = index[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0)
            h.add_edge(a, b);
    }
    return h;
}

} // namespace mec
