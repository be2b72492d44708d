#include "oropeak/projection.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "oropeak/errors.hpp"

namespace oropeak {

ProjectionResult project_bipartite_jaccard(const BipartiteGraph& b, Side side,
                                           double epsilon) {
    if (!(epsilon > 0.0))
        throw input_error("projection epsilon must be positive");

    // View the instance as node side / anchor side so both projections run
    // through one code path.
    const bool onto_left = side == Side::Left;
    const std::size_t n = onto_left ? b.left_count() : b.right_count();
    auto node_adj = [&](NodeId v) -> const std::vector<NodeId>& {
        return onto_left ? b.left_neighbors(v) : b.right_neighbors(v);
    };
    auto anchor_adj = [&](NodeId a) -> const std::vector<NodeId>& {
        return onto_left ? b.right_neighbors(a) : b.left_neighbors(a);
    };

    ProjectionResult result;
    result.heights.values.resize(n);
    for (NodeId v = 0; v < n; ++v)
        result.heights.values[v] = static_cast<double>(node_adj(v).size());

    // Count shared anchors per pair by walking each anchor's neighborhood;
    // only co-occurring pairs ever materialize.
    std::vector<Edge> edges;
    std::vector<std::unordered_map<NodeId, std::uint32_t>> shared(n);
    const std::size_t anchors = onto_left ? b.right_count() : b.left_count();
    for (NodeId a = 0; a < anchors; ++a) {
        const auto& members = anchor_adj(a);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                NodeId u = members[i], v = members[j];
                if (u > v)
                    std::swap(u, v);
                ++shared[u][v];
            }
    }
    for (NodeId u = 0; u < n; ++u)
        for (const auto& [v, common] : shared[u]) {
            double du = result.heights.values[u];
            double dv = result.heights.values[v];
            double united = du + dv - static_cast<double>(common);
            double w = 1.0 - static_cast<double>(common) / united;
            if (w <= 0.0) {
                w = epsilon;
                ++result.clamped_pairs;
            }
            edges.push_back({u, v, w});
        }

    std::vector<std::string> labels;
    const auto& side_labels = onto_left ? b.left_labels() : b.right_labels();
    if (!side_labels.empty())
        labels = side_labels;
    result.graph = WeightedGraph(n, std::move(edges), std::move(labels));
    return result;
}

} // namespace oropeak
