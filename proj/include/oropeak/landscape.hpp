#pragma once

#include <vector>

#include "oropeak/distance.hpp"
#include "oropeak/graph.hpp"

namespace oropeak {

/// A landscape couples a traversal graph (typically the pruned edge set)
/// with heights and the shortest-path metric of the ORIGINAL graph. All
/// height comparisons inside landscape algorithms are symbolically
/// perturbed: ties are broken toward the smaller node id (height_above),
/// which makes the maximum, peaks, and path minima unique without
/// touching the data. Raw heights still decide key-col membership and
/// prominence arithmetic.
struct Landscape {
    const WeightedGraph& traversal;
    DistanceOracle& metric;
    const HeightMap& heights;
    NodeId max_node;

    bool higher(NodeId a, NodeId b) const { return height_above(heights, a, b); }
    double h(NodeId v) const { return heights.values[v]; }
};

/// Validates connectivity and height coverage, and designates the maximum.
Landscape make_landscape(const WeightedGraph& traversal, DistanceOracle& metric,
                         const HeightMap& heights);

/// One (peak, col, endpoint) witness of a peak-graph edge: an optimal
/// ascending path from `peak` bottoms out at key col `col` and ends at
/// the strictly higher peak `endpoint`.
struct Triple {
    NodeId peak;
    NodeId col;
    NodeId endpoint;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct PeakRecord {
    NodeId peak = 0;
    bool is_max = false;
    /// Raw height of the best col; unset (0) for the maximum.
    double key_height = 0.0;
    double prominence = 0.0;
    std::vector<NodeId> key_cols;    // sorted; empty for the maximum
    std::vector<NodeId> dominators;  // sorted; empty for the maximum
    std::vector<Triple> triples;     // sorted; empty for the maximum
};

/// Nodes strictly higher than every traversal neighbor (perturbed order),
/// ascending by id. The designated maximum is always included.
std::vector<NodeId> peaks(const Landscape& L);

/// Full record for one non-max peak v. An ascending path runs from v to a
/// strictly higher peak with no higher peak in between; its col is the
/// first node (in path order) attaining the raw minimum height. The key
/// height is the best such minimum over all ascending paths; key cols,
/// dominators and triples collect the optima. Computed by a bottleneck
/// (maximize-the-minimum) Dijkstra that absorbs higher peaks, followed by
/// two reachability sweeps that recognize first-visited minima.
PeakRecord key_cols_and_dominators(const Landscape& L, NodeId v);

/// Records for every peak in ascending peak id. The maximum's record has
/// prominence = its height and empty col/dominator sets. Per-peak work is
/// independent; output does not depend on the thread count.
std::vector<PeakRecord> prominence_all(const Landscape& L, unsigned threads = 1);

/// Literal reference implementation: enumerates every simple path between
/// peak pairs, filters ascending paths by definition, and reads cols off
/// each path. Only for graphs with at most `kBruteForceNodeLimit` nodes.
inline constexpr std::size_t kBruteForceNodeLimit = 12;
std::vector<PeakRecord> brute_force_records(const Landscape& L);

/// All cols over ALL ascending paths of v (not only the optimal ones),
/// sorted. Brute force; used to cross-check mountain-graph neighborhoods.
std::vector<NodeId> brute_force_all_cols(const Landscape& L, NodeId v);

} // namespace oropeak
