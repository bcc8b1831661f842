#pragma once

#include <cstddef>

#include "mec/coloring.hpp"
#include "mec/graph.hpp"

namespace mec {

inline constexpr int kDefaultEdgeLimit = 12;

/// Thrown when an exhaustive search is asked to run past its size cap.
class EdgeLimitExceeded : public Refusal {
public:
    EdgeLimitExceeded(int edges, int limit);

    int edges() const noexcept { return edges_; }
    int limit() const noexcept { return limit_; }

private:
    int edges_;
    int limit_;
};

struct SigmaResult {
    int sigma = 0;
    EdgeColoring witness; // valid under the profile, exactly `sigma` colors
};

/// Maximum number of colors over all profile-valid edge colorings.
///
/// Enumerates edge partitions as restricted-growth strings (edge i joins an
/// existing class or opens the next one), abandoning a branch as soon as a
/// palette exceeds its capacity or the branch cannot beat the incumbent.
SigmaResult sigma_exact(const Graph& g, const ValidityProfile& profile = ValidityProfile::uniform(2),
                        int edge_limit = kDefaultEdgeLimit);

/// sigma_exact(g, profile) >= k, stopping at the first coloring that reaches k.
bool sigma_threshold(const Graph& g, int k, const ValidityProfile& profile = ValidityProfile::uniform(2),
                     int edge_limit = kDefaultEdgeLimit);

/// Same quantity as sigma_exact, computed by a memoized sweep over the
/// edges: the state after each edge is the relabeled palettes of the
/// vertices that still have unprocessed edges. Exact on any graph; its cost
/// grows with the sweep's frontier width rather than the edge count.
SigmaResult sigma_frontier(const Graph& g, const ValidityProfile& profile = ValidityProfile::uniform(2),
                           std::size_t state_limit = 4'000'000);

} // namespace mec
