#include "oropeak/pipeline.hpp"

#include "oropeak/errors.hpp"

namespace oropeak {

std::vector<NodeId> PipelineResult::peak_ids() const {
    std::vector<NodeId> ids;
    ids.reserve(records.size());
    for (const PeakRecord& rec : records)
        ids.push_back(rec.peak);
    return ids;
}

std::unique_ptr<PipelineResult> run_pipeline(WeightedGraph graph, HeightMap heights,
                                             const PipelineOptions& opts) {
    if (!graph.connected())
        throw input_error("pipeline input must be connected; extract a component first");

    auto result = std::make_unique<PipelineResult>();
    result->graph = std::move(graph);
    result->heights = std::move(heights);
    result->oracle = std::make_unique<DistanceOracle>(result->graph);

    const WeightedGraph* traversal = &result->graph;
    if (opts.use_rng) {
        result->rng =
            relative_neighborhood_graph(result->graph, *result->oracle, opts.threads);
        traversal = &result->rng->pruned;
    }

    result->landscape = std::make_unique<Landscape>(
        make_landscape(*traversal, *result->oracle, result->heights));
    result->records = prominence_all(*result->landscape, opts.threads);
    result->mg = mountain_graph(result->records);
    result->pg = peak_graph(result->records);
    result->tree = line_parent_tree(result->pg, *result->oracle, result->heights,
                                    result->landscape->max_node);
    return result;
}

StatsRow pipeline_stats(const std::string& name, const PipelineResult& result) {
    StatsRow row;
    row.name = name;
    row.n_nodes = result.graph.node_count();
    if (row.n_nodes >= 2)
        row.density = density(result.graph);
    if (result.rng && row.n_nodes >= 2)
        row.rng_density = density(result.rng->pruned);
    row.n_mg = result.mg.nodes.size();
    if (row.n_mg >= 2)
        row.mg_density = density(row.n_mg, result.mg.edges.size());
    auto stats = tree_stats(result.tree);
    row.n_lp = stats.nodes;
    row.tree_width = stats.width;
    row.tree_depth = stats.depth;
    return row;
}

} // namespace oropeak
