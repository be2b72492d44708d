#pragma once

#include <cstddef>
#include <limits>
#include <list>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "oropeak/graph.hpp"

namespace oropeak {

/// Unreachable pairs carry +infinity, never a finite sentinel.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

inline bool reachable(double dist) { return dist != kUnreachable; }

/// Single-source shortest path distances (Dijkstra, binary heap).
std::vector<double> dijkstra_row(const WeightedGraph& g, NodeId source);

/// Distances from `source` to every node, stopping early once all of
/// `targets` are settled. Entries for unsettled nodes may be upper bounds;
/// entries for settled nodes (all targets included) are exact.
std::vector<double> dijkstra_to_targets(const WeightedGraph& g, NodeId source,
                                        const std::vector<NodeId>& targets);

/// Shortest-path metric access with a bounded row cache. Rows are computed
/// lazily and shared; eviction is least-recently-used. Thread-safe.
class DistanceOracle {
public:
    /// max_rows == 0 picks a default: every row when the graph is small
    /// enough to afford full all-pairs storage, a fixed budget otherwise.
    explicit DistanceOracle(const WeightedGraph& g, std::size_t max_rows = 0);

    /// Full distance row from `source` (shared, immutable).
    std::shared_ptr<const std::vector<double>> row(NodeId source) const;

    double distance(NodeId u, NodeId v) const { return (*row(u))[v]; }

    std::size_t capacity() const { return max_rows_; }

private:
    const WeightedGraph& g_;
    std::size_t max_rows_;

    mutable std::mutex mutex_;
    mutable std::list<NodeId> lru_; // front = most recent
    mutable std::unordered_map<
        NodeId, std::pair<std::shared_ptr<const std::vector<double>>,
                          std::list<NodeId>::iterator>>
        cache_;
};

} // namespace oropeak
