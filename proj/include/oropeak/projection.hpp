#pragma once

#include <cstddef>

#include "oropeak/graph.hpp"

namespace oropeak {

enum class Side { Left, Right };

struct ProjectionResult {
    WeightedGraph graph;
    HeightMap heights;
    /// Pairs whose Jaccard distance of 0 (identical nonempty neighborhoods)
    /// was raised to `epsilon` so every weight stays positive.
    std::size_t clamped_pairs = 0;
};

/// One-mode projection of a bipartite graph onto `side`. Two nodes are
/// joined iff they share at least one neighbor; the edge weight is the
/// Jaccard distance 1 - |N(u) ∩ N(v)| / |N(u) ∪ N(v)| of their
/// neighborhoods, and each node's height is its bipartite degree.
ProjectionResult project_bipartite_jaccard(const BipartiteGraph& b, Side side,
                                           double epsilon = 1e-9);

} // namespace oropeak
