#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "oropeak/distance.hpp"
#include "oropeak/graph.hpp"

namespace oropeak {

struct RemovedEdge {
    Edge edge;
    /// Node strictly closer to both endpoints than they are to each other.
    NodeId witness;
};

struct RngResult {
    /// Same node set and labels as the input; surviving edges keep their
    /// original weights.
    WeightedGraph pruned;
    std::vector<RemovedEdge> removed;
};

/// Relative neighborhood graph of the shortest-path metric space of a
/// connected graph: an edge {u,v} survives iff no third node m satisfies
/// max(d(u,m), d(v,m)) < d(u,v). Only original edges need testing because
/// the result is always a subset of them. Comparisons are exact; an edge
/// whose best witness only ties d(u,v) survives.
RngResult relative_neighborhood_graph(const WeightedGraph& g, DistanceOracle& d,
                                      unsigned threads = 1);

struct RngReport {
    std::size_t nodes = 0;
    std::size_t edges_before = 0;
    std::size_t edges_after = 0;
    std::optional<double> density_before; // absent when n < 2
    std::optional<double> density_after;
    /// witness node -> number of removals it justified
    std::map<NodeId, std::size_t> witness_histogram;
};

RngReport rng_report(const WeightedGraph& original, const RngResult& r);

} // namespace oropeak
