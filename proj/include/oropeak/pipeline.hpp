#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "oropeak/distance.hpp"
#include "oropeak/evaluation.hpp"
#include "oropeak/graph.hpp"
#include "oropeak/landscape.hpp"
#include "oropeak/mountain.hpp"
#include "oropeak/rng.hpp"

namespace oropeak {

struct PipelineOptions {
    bool use_rng = true; // traverse the pruned edge set; metric stays original
    unsigned threads = 1;
};

/// Everything one condensation run produces. Heap-allocated and pinned:
/// the landscape and the distance oracle hold references into the result,
/// so the object must not move after construction.
struct PipelineResult {
    WeightedGraph graph;            // the (connected) input the run used
    HeightMap heights;
    std::unique_ptr<DistanceOracle> oracle;
    std::optional<RngResult> rng;   // engaged when pruning ran
    std::unique_ptr<Landscape> landscape;
    std::vector<PeakRecord> records;
    MountainGraph mg;
    PeakGraph pg;
    LineParentTree tree;

    std::vector<NodeId> peak_ids() const;
};

/// graph + heights -> prune -> prominence records -> mountain graph ->
/// peak graph -> line-parent tree. The input must already be connected
/// (callers decide how to handle components).
std::unique_ptr<PipelineResult> run_pipeline(WeightedGraph graph, HeightMap heights,
                                             const PipelineOptions& opts = {});

StatsRow pipeline_stats(const std::string& name, const PipelineResult& result);

} // namespace oropeak
