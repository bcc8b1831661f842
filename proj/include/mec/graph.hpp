#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace mec {

using Vertex = int;
using EdgeId = int;
using Color = int;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad graph, non-total coloring, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A line-oriented document could not be parsed.
class ParseError : public InvalidInput {
public:
    ParseError(int line, const std::string& what)
        : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// The operation declines to run on this input (size cap, precondition).
class Refusal : public Error {
public:
    using Error::Error;
};

/// Undirected edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
    bool operator==(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with stable edge ids 0..m-1
/// (insertion order). Self-loops and parallel edges are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);

    EdgeId add_edge(Vertex a, Vertex b);

    int num_vertices() const noexcept { return static_cast<int>(incident_.size()); }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const EdgeId> incident(Vertex v) const { return incident_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
    int max_degree() const;

    /// Neighbors of v in ascending id order.
    std::vector<Vertex> neighbors(Vertex v) const;

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
    bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

    /// Subgraph on `keep` (renumbered in the given order), retaining the
    /// edges among kept vertices in original edge-id order.
    Graph induced(std::span<const Vertex> keep) const;

    bool operator==(const Graph& other) const { return edges_ == other.edges_ && num_vertices() == other.num_vertices(); }

private:
    static std::uint64_t key(Vertex a, Vertex b) noexcept
    {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
    }

    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
    std::unordered_map<std::uint64_t, EdgeId> lookup_;
};

} // namespace mec
