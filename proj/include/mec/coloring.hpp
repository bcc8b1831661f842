#pragma once

#include <optional>
#include <vector>

#include "mec/graph.hpp"

namespace mec {

/// Edge coloring: one color index (>= 0) per edge id.
class EdgeColoring {
public:
    EdgeColoring() = default;
    explicit EdgeColoring(std::vector<Color> colors);

    Color operator[](EdgeId e) const { return colors_.at(static_cast<std::size_t>(e)); }
    const std::vector<Color>& colors() const noexcept { return colors_; }
    int size() const noexcept { return static_cast<int>(colors_.size()); }

    /// Number of distinct colors in the image.
    int colors_used() const;

    /// Relabels colors onto 0..k-1 preserving their relative order.
    EdgeColoring normalized() const;

    bool operator==(const EdgeColoring&) const = default;

private:
    std::vector<Color> colors_;
};

/// Per-vertex palette capacity: a uniform q, or an f-map with values in {1,2}.
class ValidityProfile {
public:
    ValidityProfile() = default;

    static ValidityProfile uniform(int q);
    static ValidityProfile per_vertex(std::vector<int> f);

    int capacity(Vertex v) const
    {
        return f_ ? (*f_).at(static_cast<std::size_t>(v)) : q_;
    }
    int q() const noexcept { return q_; }
    const std::optional<std::vector<int>>& f() const noexcept { return f_; }

    /// Throws InvalidInput when an f-map does not cover all n vertices.
    void check_covers(int n) const;

private:
    int q_ = 2;
    std::optional<std::vector<int>> f_;
};

/// Sorted distinct colors on the edges incident to v.
std::vector<Color> palette(const Graph& g, const EdgeColoring& c, Vertex v);

struct VerifyReport {
    bool valid = false;
    int colors_used = 0;
    std::vector<Vertex> violations;
};

VerifyReport verify_coloring(const Graph& g, const EdgeColoring& c,
                             const ValidityProfile& profile = ValidityProfile::uniform(2));

/// One representative edge (the lowest id) per color class, on the same
/// vertex set. Throws InvalidInput if c is not 2-valid.
Graph character_subgraph(const Graph& g, const EdgeColoring& c);

bool is_two_factor(const Graph& g);

/// Merges every color >= k-1 (after normalization) into color k-1.
EdgeColoring compress_colors(const EdgeColoring& c, int k);

} // namespace mec
