#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mec/coloring.hpp"
#include "mec/graph.hpp"

namespace mec {

/// Bit i set means color i is in the set.
using ColorSet = std::uint64_t;

inline constexpr int kMaxSolverColors = 63;

inline ColorSet color_bit(Color c) { return ColorSet{1} << c; }
std::vector<Color> colors_of(ColorSet s);

/// Palette guess for the cover vertices: tau[v] is nonzero exactly for v in the cover.
struct PaletteAssignment {
    std::vector<Vertex> cover;
    std::vector<ColorSet> tau; // indexed by vertex

    ColorSet of(Vertex v) const { return tau[static_cast<std::size_t>(v)]; }
    bool operator==(const PaletteAssignment&) const = default;
};

/// Every palette assignment over colors 0..k-1 that uses all k colors and
/// gives every edge inside the cover a shared color, one per relabeling
/// class. Cover vertices are processed in the given order; a color may first
/// appear only after all smaller ones, and two colors first appearing
/// together stay interchangeable until a palette holds exactly one of them,
/// which must be the smaller. With cap_by_degree, |tau(v)| <= deg(v).
void enumerate_palettes(const Graph& g, std::span<const Vertex> cover, int k, bool cap_by_degree,
                        const std::function<bool(const PaletteAssignment&)>& visit);
std::vector<PaletteAssignment> enumerate_palettes(const Graph& g, std::span<const Vertex> cover, int k,
                                                  bool cap_by_degree = false);

/// Counters for the search; widths are the largest fan-out seen at any branch point.
struct SolverStats {
    std::uint64_t palettes = 0;
    std::uint64_t x_guesses = 0;
    std::uint64_t top_calls = 0;
    std::uint64_t top_branches = 0;
    std::uint64_t across_calls = 0;
    std::uint64_t across_branches = 0;
    int max_top_width = 0;
    int max_across_width = 0;

    void merge(const SolverStats& other);
};

/// Colors every edge inside the cover from tau(u) & tau(v), using exactly
/// the colors in x. A color outside x rejects the branch unless it was
/// already used; an edge with two unused options splits the search in two.
/// Returns the colors of the cover edges (indexed by edge id, -1 elsewhere).
std::optional<std::vector<Color>> check_top(const Graph& g, const PaletteAssignment& tau, ColorSet x,
                                            SolverStats* stats = nullptr);

/// Palettes a vertex outside the cover can end up with: every neighbor's
/// tau meets the set, and a two-color set is realized by two distinct
/// neighbors.
struct FeasibilityList {
    Vertex owner = -1;
    std::vector<ColorSet> candidates;
};

FeasibilityList feasibility_list(const Graph& g, const PaletteAssignment& tau, Vertex u);

/// Chosen palette per listed vertex when every color of `remaining` can be
/// realized on the cut edges, in the order of `lists`.
std::optional<std::vector<ColorSet>> check_across(std::span<const FeasibilityList> lists, ColorSet remaining,
                                                  SolverStats* stats = nullptr);

/// Cut-edge colors for an outside vertex u taking palette y: both colors of
/// a pair are realized, every other edge takes the smallest allowed color.
void color_cut_edges(const Graph& g, const PaletteAssignment& tau, Vertex u, ColorSet y, std::vector<Color>& colors);

struct SolveOptions {
    int threads = 1;
    SolverStats* stats = nullptr;
};

struct SolveResult {
    bool yes = false;
    std::optional<EdgeColoring> witness; // exactly k colors
};

/// Does g have a 2-valid edge coloring with at least (equivalently exactly) k colors?
SolveResult solve_exact(const Graph& g, int k, const SolveOptions& options = {});

} // namespace mec
