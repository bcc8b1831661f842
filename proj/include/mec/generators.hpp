#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mec/graph.hpp"
#include "mec/io.hpp"

namespace mec {

/// Multi-colored independent set instance: pick one vertex per class, pairwise non-adjacent.
struct MCISInstance {
    Graph graph;
    std::vector<int> part; // class index 0..k-1 per vertex
    int k = 0;

    /// Throws InvalidInput unless every class is nonempty and every vertex has a class.
    void validate() const;
    std::vector<std::vector<Vertex>> classes() const;
};

// MCIS documents (1-based):
//   p mcis <n> <m> <k>
//   v <vertex> <class>
//   e <u> <v>
MCISInstance load_mcis(std::string_view text);
std::string render_mcis(const MCISInstance& inst);

/// Layout of the reduced graph: originals 0..n-1, class gates n..n+k-1,
/// apex n+k, then five gadget vertices per original edge (in edge-id order):
/// e_u, e_u', e_3, e_v', e_v. Gates and e_3 get capacity 2, the rest 1;
/// threshold k+1.
AnnotatedGraph reduce_mcis(const MCISInstance& inst);

struct PendantResult {
    Graph graph;
    int threshold = 0;
    int pendants = 0;
};

/// Attaches a fresh degree-1 neighbor to every capacity-1 vertex. Each
/// pendant edge can take its own color, so the threshold grows by the
/// number of pendants added.
PendantResult pendant_transform(const AnnotatedGraph& inst);

/// Edge {u,v} (u < v, pairs in lexicographic order) is kept when a uniform
/// draw from mt19937_64 (top 53 bits scaled to [0,1)) falls below p.
Graph gen_random(int n, double p, std::uint64_t seed);

/// Disjoint cycles of length >= 3 covering all n vertices, on a shuffled vertex order.
Graph gen_two_factor(int n, std::uint64_t seed);

} // namespace mec
