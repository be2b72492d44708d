#include "oropeak/rng.hpp"

#include <algorithm>

#include "oropeak/errors.hpp"
#include "oropeak/parallel.hpp"

namespace oropeak {

RngResult relative_neighborhood_graph(const WeightedGraph& g, DistanceOracle& d,
                                      unsigned threads) {
    if (!g.connected())
        throw input_error("relative neighborhood graph requires a connected graph");

    const auto& edges = g.edges();
    const std::size_t n = g.node_count();

    // Verdict per edge: the first witness in ascending node id, or none.
    // Slots are written independently, so the result is thread-count free.
    std::vector<std::optional<NodeId>> witness(edges.size());
    parallel_for(edges.size(), threads, [&](std::size_t i) {
        const Edge& e = edges[i];
        auto du = d.row(e.u);
        auto dv = d.row(e.v);
        const double duv = (*du)[e.v]; // metric distance, not the edge weight
        for (NodeId m = 0; m < n; ++m) {
            if (m == e.u || m == e.v)
                continue;
            if (std::max((*du)[m], (*dv)[m]) < duv) {
                witness[i] = m;
                break;
            }
        }
    });

    RngResult result;
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (witness[i])
            result.removed.push_back({edges[i], *witness[i]});
        else
            kept.push_back(edges[i]);
    }
    result.pruned = WeightedGraph(n, std::move(kept), g.labels());
    return result;
}

RngReport rng_report(const WeightedGraph& original, const RngResult& r) {
    RngReport report;
    report.nodes = original.node_count();
    report.edges_before = original.edge_count();
    report.edges_after = r.pruned.edge_count();
    if (report.nodes >= 2) {
        report.density_before = density(original);
        report.density_after = density(r.pruned);
    }
    for (const RemovedEdge& rm : r.removed)
        ++report.witness_histogram[rm.witness];
    return report;
}

} // namespace oropeak
