#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oropeak/landscape.hpp"

namespace oropeak {

enum class Role : std::uint8_t { Peak, KeyCol };

/// Graph on peaks and key cols, linked by the defining triples: each
/// triple (v,u,w) contributes edges {v,u} and {u,w}. Node and edge lists
/// use original landscape ids, sorted.
struct MountainGraph {
    std::vector<NodeId> nodes;
    std::vector<Role> roles; // parallel to nodes
    std::vector<std::pair<NodeId, NodeId>> edges;

    /// Adjacency view with nodes reindexed by their position in `nodes`
    /// (ascending ids, so the perturbed height order carries over).
    WeightedGraph as_weighted_graph() const;
    std::optional<std::size_t> index_of(NodeId original) const;
};

/// Assembles the mountain graph from complete per-peak records. The node
/// set is peaks ∪ key cols; under height ties the union can overlap (a
/// prominence-zero peak is its own key col, and a key col can itself be
/// a peak), in which case the node keeps the peak role. Degenerate
/// {v, v} pairs from such triples contribute no edge.
MountainGraph mountain_graph(const std::vector<PeakRecord>& records);

struct ClauseResult {
    bool passed = true;
    std::string detail; // failure witness, empty when passed
};

/// Structural guarantees of the mountain graph:
///   1. it is connected;
///   2. its peaks (as its own landscape, heights restricted) are exactly
///      the landscape's peaks;
///   3. every MG-neighbor col u of a peak v with a strictly higher second
///      neighbor is matched by some col of v at height ≥ h(u) — checked
///      against the path-enumeration oracle, so only for small graphs;
///   4. prominence is recoverable from MG neighborhoods alone:
///      prom(v) = min over such cols u of h(v) − h(u).
struct MountainGraphReport {
    ClauseResult connected;
    ClauseResult peaks_preserved;
    ClauseResult col_bound;        // skipped (passed, note in detail) when too large
    ClauseResult prominence_match;
    bool all_passed() const;
};

MountainGraphReport verify_mountain_graph(const Landscape& L, const MountainGraph& mg,
                                     const std::vector<PeakRecord>& records);

/// Peaks linked straight to their dominators; one edge per defining
/// triple's (start, end) pair, with the full triple list retained.
struct PeakGraph {
    std::vector<NodeId> peaks; // sorted
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<Triple> triples;
};

PeakGraph peak_graph(const std::vector<PeakRecord>& records);

/// Rooted hierarchy: every non-max peak points to the higher peak chosen
/// by the two-stage distance filter. Parallel arrays indexed like
/// `peaks`; the root has no parent/col entry.
struct LineParentTree {
    NodeId root = 0;
    std::vector<NodeId> peaks;                  // sorted
    std::vector<std::optional<NodeId>> parent;  // line parent per peak
    std::vector<std::optional<NodeId>> via_col; // key col that won stage 2
    std::vector<std::uint32_t> depth;           // root = 0

    std::optional<std::size_t> index_of(NodeId peak) const;
};

/// Per peak v: stage 1 keeps, for each key col u of v, the triple whose
/// endpoint is closest to u (ties: higher endpoint, then smaller id);
/// stage 2 keeps the surviving triple with the smallest d(v,u) (ties:
/// smaller d(u,endpoint), then smaller col id, then smaller endpoint id).
/// Distances come from the original graph's metric. The winner's endpoint
/// is v's line parent; the result is always a tree rooted at the maximum.
LineParentTree line_parent_tree(const PeakGraph& pg, DistanceOracle& d,
                                const HeightMap& h, NodeId max_node);

struct TreeStats {
    std::size_t nodes = 0;
    std::size_t width = 0; // most nodes sharing one depth
    std::size_t depth = 0; // longest root distance, in edges
};

TreeStats tree_stats(const LineParentTree& t);

} // namespace oropeak
