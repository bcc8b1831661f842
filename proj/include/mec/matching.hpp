#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "mec/coloring.hpp"
#include "mec/graph.hpp"

namespace mec {

/// Pairwise vertex-disjoint set of edge ids.
struct Matching {
    std::vector<EdgeId> edges;

    int size() const noexcept { return static_cast<int>(edges.size()); }

    /// Both endpoints of every matched edge, ascending.
    std::vector<Vertex> saturated(const Graph& g) const;
};

/// Greedy over ascending edge ids; inclusion-maximal.
Matching maximal_matching(const Graph& g);

/// Matching coloring: matched edges get distinct colors, everything
/// else shares one extra color. Uses r or r+1 colors for a matching of size r.
EdgeColoring matching_coloring(const Graph& g, const Matching& m);

namespace preprocess {

struct ForcedNo {};

struct ForcedYes {
    EdgeColoring witness;
};

struct Continue {
    Matching matching;
    std::vector<Vertex> cover;
};

} // namespace preprocess

using PreprocessResult = std::variant<preprocess::ForcedNo, preprocess::ForcedYes, preprocess::Continue>;

/// Decides the easy cases of "sigma(g) >= k". The ForcedYes witness uses
/// exactly k colors (a single color when k = 0 and g has edges).
PreprocessResult matching_preprocess(const Graph& g, int k);

/// Bipartite graph between `left` colors/vertices 0..left-1 and `right`
/// vertices 0..right-1.
struct BipartiteGraph {
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, int>> edges;
};

struct BipartiteMatching {
    std::vector<int> edges;      // indices into BipartiteGraph::edges
    std::vector<int> left_mate;  // right vertex or -1
    std::vector<int> right_mate; // left vertex or -1

    int size() const noexcept { return static_cast<int>(edges.size()); }
};

/// Maximum-cardinality matching by repeated augmenting-path search.
BipartiteMatching max_bipartite_matching(const BipartiteGraph& b);

} // namespace mec
