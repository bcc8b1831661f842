#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mec/coloring.hpp"
#include "mec/graph.hpp"

namespace mec {

enum class KernelRule { standard, dual, c4free };
enum class KernelVerdict { reduced, forced_yes, forced_no };

std::string_view to_string(KernelRule rule);
KernelRule parse_kernel_rule(std::string_view text);

/// One undo record, in original vertex ids.
struct LiftStep {
    enum class Kind { remove, contract, triangle };

    Kind kind = Kind::remove;
    Vertex v = -1;
    Vertex u = -1;   // contract: the kept neighbor; triangle: second corner
    Vertex via = -1; // contract: v's other neighbor; triangle: third corner

    bool operator==(const LiftStep&) const = default;
};

/// Maps a reduced instance back onto the original graph.
///
/// Removed vertices take the colors of a surviving twin with the same
/// neighborhood; contracted vertices re-split the bridging edge and add one
/// fresh color; removed triangle components come back with three fresh
/// colors. Steps are undone in reverse order.
struct Lifting {
    int original_vertices = 0;
    std::vector<Vertex> origin; // reduced vertex -> original vertex
    std::vector<LiftStep> steps;

    bool operator==(const Lifting&) const = default;
};

struct KernelResult {
    KernelVerdict verdict = KernelVerdict::reduced;
    Graph graph;    // the reduced instance when verdict == reduced
    int parameter = 0;
    int threshold = 0; // colors the reduced instance must reach
    std::optional<EdgeColoring> witness; // on the original graph, forced_yes only
    Lifting lifting;
    std::vector<Vertex> cover; // original ids of the matching cover, when one was computed
};

/// Vertices of I = V \ S grouped by their (identical) neighborhoods T in S.
struct NeighborhoodClass {
    std::vector<Vertex> T;
    std::vector<Vertex> members;
};

std::vector<NeighborhoodClass> neighborhood_classes(const Graph& g, std::span<const Vertex> cover);

/// Keep-count for a neighborhood class over T.
inline int class_bound(std::size_t t_size) { return std::max(10, static_cast<int>(t_size) + 1); }

/// Matching preprocessing, then truncation of every I_T to its
/// max{10, |T|+1} lowest-id members. The parameter is unchanged.
KernelResult kernelize_standard(const Graph& g, int k);

/// Deficit parameter: is sigma(g) >= n - k? Rejects when the maximum degree
/// exceeds 3k+6, otherwise contracts adjacent degree-2 pairs until none is
/// left and drops triangle components. The deficit is unchanged.
KernelResult kernelize_dual(const Graph& g, int k);

/// Thrown when a C4-free precondition fails; carries the cycle found.
class C4Found : public Refusal {
public:
    explicit C4Found(std::array<Vertex, 4> cycle);
    const std::array<Vertex, 4>& cycle() const noexcept { return cycle_; }

private:
    std::array<Vertex, 4> cycle_;
};

std::optional<std::array<Vertex, 4>> has_c4(const Graph& g);

/// C4-free graphs only: matching preprocessing, then every cover vertex
/// keeps at most two private degree-1 neighbors; isolated vertices go too.
KernelResult kernelize_c4free(const Graph& g, int k);

KernelResult kernelize(const Graph& g, int k, KernelRule rule);

/// Adjacent u, v with d(u) = d(v) = 2, where v's other neighbor `via` is not
/// already adjacent to u.
struct R2Site {
    Vertex u = -1;
    Vertex v = -1;
    Vertex via = -1;
};

std::vector<R2Site> r2_sites(const Graph& g);

/// Deletes site.v and joins site.u to site.via. Vertices above v shift down
/// by one; the bridging edge takes the id of the last edge.
Graph apply_r2(const Graph& g, const R2Site& site);

EdgeColoring lift_coloring(const Graph& original, const Lifting& lifting, const Graph& reduced,
                           const EdgeColoring& reduced_coloring);

// Sidecar format (1-based ids):
//   p lift <n_original> <n_reduced>
//   map <reduced> <original>
//   del <v>
//   contract <v> into <u> via <v'>
//   triangle <a> <b> <c>
std::string render_lifting(const Lifting& lifting);
Lifting load_lifting(std::string_view text);

} // namespace mec
