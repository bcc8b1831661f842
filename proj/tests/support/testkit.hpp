#pragma once

#include <cstdint>
#include <vector>

#include "mec/coloring.hpp"
#include "mec/generators.hpp"
#include "mec/graph.hpp"

namespace testkit {

/// One representative per isomorphism class of connected graphs on n vertices.
std::vector<mec::Graph> connected_graphs(int n);

/// All isomorphism-distinct connected graphs on 1..max_n vertices.
std::vector<mec::Graph> connected_family(int max_n);

/// G(n,p) draws until the edge count is at most max_edges; n and p are
/// derived from the seed so the family is reproducible.
mec::Graph bounded_random_graph(std::uint64_t seed, int min_n, int max_n, int max_edges);

/// Maximum colors over every map from edges to colors 0..m-1 (m <= 7 or so).
int brute_sigma(const mec::Graph& g, const mec::ValidityProfile& profile = mec::ValidityProfile::uniform(2));

/// Largest matching by trying every edge subset.
int brute_matching_size(const mec::Graph& g);

/// One vertex per class, pairwise non-adjacent, by trying every tuple.
bool brute_mcis(const mec::MCISInstance& inst);

/// Every MCIS instance with n vertices and k classes (labelled classes and edges).
std::vector<mec::MCISInstance> all_mcis_instances(int n, int k);

/// Two palette maps related by a color permutation?
bool related_by_permutation(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, int k);

} // namespace testkit
