#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oropeak {

/// Dense node index. External string labels, when present, map bijectively
/// onto 0..n-1 and live in the owning graph.
using NodeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;
    double weight;
};

struct Neighbor {
    NodeId to;
    double weight;
};

/// Undirected finite graph with strictly positive edge weights. Immutable
/// after construction; safe to share across threads.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Builds from an edge list. Rejects self-loops, duplicate edges
    /// (either orientation) and nonpositive or non-finite weights.
    /// `labels`, when nonempty, must have exactly n entries.
    WeightedGraph(std::size_t n, std::vector<Edge> edges,
                  std::vector<std::string> labels = {});

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Neighbor>& neighbors(NodeId v) const { return adjacency_[v]; }
    std::size_t degree(NodeId v) const { return adjacency_[v].size(); }

    bool has_labels() const { return !labels_.empty(); }
    /// Label of v; falls back to the decimal node index.
    std::string label(NodeId v) const;
    const std::vector<std::string>& labels() const { return labels_; }

    bool connected() const;

private:
    std::vector<Edge> edges_;                    // canonical u < v, sorted
    std::vector<std::vector<Neighbor>> adjacency_; // sorted by target id
    std::vector<std::string> labels_;
};

/// Node -> nonnegative height. Values are indexed by NodeId.
struct HeightMap {
    std::vector<double> values;

    double operator[](NodeId v) const { return values[v]; }
    std::size_t size() const { return values.size(); }
};

/// Strict total order on nodes used everywhere heights are compared:
/// (height, -id) lexicographic. Breaking every tie by id keeps maxima,
/// peaks and path minima unique without editing the data.
inline bool height_above(const HeightMap& h, NodeId a, NodeId b) {
    if (h.values[a] != h.values[b])
        return h.values[a] > h.values[b];
    return a < b;
}

/// Throws input_error unless h covers exactly the nodes of g with
/// nonnegative finite values.
void validate_heights(const WeightedGraph& g, const HeightMap& h);

/// 2|E| / (n(n-1)). Requires n >= 2.
double density(const WeightedGraph& g);
double density(std::size_t node_count, std::size_t edge_count);

struct ComponentResult {
    WeightedGraph graph;
    /// new id -> old id in the input graph
    std::vector<NodeId> to_original;
    std::size_t component_count = 0;
};

/// Induced subgraph on the largest connected component; ties broken in
/// favor of the component containing the smallest node id. Labels carry
/// over. Errors on the empty graph.
ComponentResult largest_component(const WeightedGraph& g);

/// All connected components as induced subgraphs, ordered by
/// (size desc, smallest contained id asc).
std::vector<ComponentResult> all_components(const WeightedGraph& g);

/// Induced subgraph on `nodes` (sorted, unique, in range). New id i maps
/// back to nodes[i]; labels carry over.
WeightedGraph induced_subgraph(const WeightedGraph& g,
                               const std::vector<NodeId>& nodes);

/// Unweighted bipartite graph; edges connect left to right only.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::size_t n_left, std::size_t n_right,
                   std::vector<std::pair<NodeId, NodeId>> edges,
                   std::vector<std::string> left_labels = {},
                   std::vector<std::string> right_labels = {});

    std::size_t left_count() const { return left_adj_.size(); }
    std::size_t right_count() const { return right_adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<NodeId>& left_neighbors(NodeId l) const { return left_adj_[l]; }
    const std::vector<NodeId>& right_neighbors(NodeId r) const { return right_adj_[r]; }

    std::string left_label(NodeId l) const;
    std::string right_label(NodeId r) const;
    const std::vector<std::string>& left_labels() const { return left_labels_; }
    const std::vector<std::string>& right_labels() const { return right_labels_; }

private:
    std::vector<std::vector<NodeId>> left_adj_;  // sorted
    std::vector<std::vector<NodeId>> right_adj_; // sorted
    std::vector<std::string> left_labels_;
    std::vector<std::string> right_labels_;
    std::size_t edge_count_ = 0;
};

} // namespace oropeak
