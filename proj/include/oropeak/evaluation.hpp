#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oropeak/graph.hpp"
#include "oropeak/mountain.hpp"

namespace oropeak {

/// One summary row of the condensation pipeline; densities are absent for
/// graphs with fewer than two nodes.
struct StatsRow {
    std::string name;
    std::size_t n_nodes = 0;
    std::optional<double> density;
    std::optional<double> rng_density; // on the same node set as the input
    std::size_t n_mg = 0;
    std::optional<double> mg_density;
    std::size_t n_lp = 0;
    std::size_t tree_width = 0;
    std::size_t tree_depth = 0;
};

inline constexpr const char* kStatsHeader =
    "name,n_nodes,density,rng_density,n_mg,mg_density,n_lp,tree_width,tree_depth";

std::string stats_row_csv(const StatsRow& row);

struct MspdSummary {
    std::size_t count = 0; // nodes outside the target set
    double mean = 0.0;
    double median = 0.0;
    double max = 0.0;
};

/// Minimal shortest-path distance from every non-target node to the
/// target set, via one multi-source run on the ORIGINAL weighted graph.
/// Absent when every node is a target. Even-sized populations take the
/// average of the two middle values as the median.
std::optional<MspdSummary> mspd(const WeightedGraph& g,
                                const std::vector<NodeId>& targets);

/// The n highest nodes (ties toward smaller id), ascending by id.
std::vector<NodeId> top_n_highest(const HeightMap& h, std::size_t n);

struct SampledGraph {
    WeightedGraph graph;               // largest component of the sample
    std::vector<NodeId> to_original;
};

/// Samples m distinct edges, each drawn with probability proportional to
/// 1 - w(e) (weights at or above 1 contribute a floor of epsilon), then
/// keeps the largest connected component. Rejects inputs where every edge
/// weighs >= 1.
SampledGraph edge_sampling_baseline(const WeightedGraph& g, std::size_t m,
                                    std::uint64_t seed);

/// The edge indices such a run would sample, before the component step.
std::vector<std::size_t> edge_sampling_indices(const WeightedGraph& g,
                                               std::size_t m, std::uint64_t seed);

/// PageRank scores (damping 0.85, L1 tolerance 1e-10) with transition
/// probabilities proportional to the similarity 1 - w(e) per incident
/// edge (floored at epsilon when w >= 1), or uniform when `weighted` is
/// false. Deterministic.
std::vector<double> pagerank(const WeightedGraph& g, bool weighted = true);

/// Samples k nodes without replacement proportional to PageRank, then
/// keeps the largest component of the induced subgraph.
SampledGraph pagerank_node_sampling(const WeightedGraph& g, std::size_t k,
                                    std::uint64_t seed, bool weighted = true);

} // namespace oropeak
