#include "oropeak/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "oropeak/errors.hpp"

namespace oropeak {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges,
                             std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n)
        throw input_error("label count " + std::to_string(labels.size()) +
                          " does not match node count " + std::to_string(n));

    adjacency_.assign(n, {});
    labels_ = std::move(labels);

    for (Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw input_error("edge endpoint out of range: " + std::to_string(e.u) +
                              "-" + std::to_string(e.v) + " with " +
                              std::to_string(n) + " nodes");
        if (e.u == e.v)
            throw input_error("self-loop at node " + std::to_string(e.u));
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw input_error("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " has nonpositive or non-finite weight");
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            throw input_error("duplicate edge " + std::to_string(edges[i].u) + "-" +
                              std::to_string(edges[i].v));
    edges_ = std::move(edges);

    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back({e.v, e.weight});
        adjacency_[e.v].push_back({e.u, e.weight});
    }
    for (auto& nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
}

std::string WeightedGraph::label(NodeId v) const {
    if (v < labels_.size())
        return labels_[v];
    return std::to_string(v);
}

bool WeightedGraph::connected() const {
    const std::size_t n = node_count();
    if (n == 0)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (const Neighbor& nb : adjacency_[v])
            if (!seen[nb.to]) {
                seen[nb.to] = 1;
                ++reached;
                stack.push_back(nb.to);
            }
    }
    return reached == n;
}

void validate_heights(const WeightedGraph& g, const HeightMap& h) {
    if (h.values.size() != g.node_count())
        throw input_error("height count " + std::to_string(h.values.size()) +
                          " does not match node count " +
                          std::to_string(g.node_count()));
    for (std::size_t v = 0; v < h.values.size(); ++v)
        if (!(h.values[v] >= 0.0) || !std::isfinite(h.values[v]))
            throw input_error("node " + std::to_string(v) +
                              " has negative or non-finite height");
}

double density(std::size_t node_count, std::size_t edge_count) {
    if (node_count < 2)
        throw input_error("density requires at least 2 nodes, got " +
                          std::to_string(node_count));
    return 2.0 * static_cast<double>(edge_count) /
           (static_cast<double>(node_count) * static_cast<double>(node_count - 1));
}

double density(const WeightedGraph& g) {
    return density(g.node_count(), g.edge_count());
}

namespace {

std::vector<std::vector<NodeId>> component_node_sets(const WeightedGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<NodeId>> comps;
    for (NodeId start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        std::vector<NodeId> comp;
        std::vector<NodeId> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const Neighbor& nb : g.neighbors(v))
                if (!seen[nb.to]) {
                    seen[nb.to] = 1;
                    stack.push_back(nb.to);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // Larger first; among equal sizes the one containing the smallest id.
    std::stable_sort(comps.begin(), comps.end(),
                     [](const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
                         if (a.size() != b.size())
                             return a.size() > b.size();
                         return a.front() < b.front();
                     });
    return comps;
}

ComponentResult make_component(const WeightedGraph& g,
                               const std::vector<NodeId>& nodes,
                               std::size_t component_count) {
    ComponentResult result;
    result.graph = induced_subgraph(g, nodes);
    result.to_original = nodes;
    result.component_count = component_count;
    return result;
}

} // namespace

WeightedGraph induced_subgraph(const WeightedGraph& g,
                               const std::vector<NodeId>& nodes) {
    std::vector<NodeId> to_new(g.node_count(), static_cast<NodeId>(-1));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] >= g.node_count())
            throw input_error("subgraph node " + std::to_string(nodes[i]) +
                              " out of range");
        to_new[nodes[i]] = static_cast<NodeId>(i);
    }

    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (to_new[e.u] != static_cast<NodeId>(-1) && to_new[e.v] != static_cast<NodeId>(-1))
            edges.push_back({to_new[e.u], to_new[e.v], e.weight});

    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(nodes.size());
        for (NodeId old : nodes)
            labels.push_back(g.label(old));
    }
    return WeightedGraph(nodes.size(), std::move(edges), std::move(labels));
}

ComponentResult largest_component(const WeightedGraph& g) {
    if (g.node_count() == 0)
        throw input_error("largest_component on empty graph");
    auto comps = component_node_sets(g);
    return make_component(g, comps.front(), comps.size());
}

std::vector<ComponentResult> all_components(const WeightedGraph& g) {
    auto comps = component_node_sets(g);
    std::vector<ComponentResult> result;
    result.reserve(comps.size());
    for (const auto& nodes : comps)
        result.push_back(make_component(g, nodes, comps.size()));
    return result;
}

BipartiteGraph::BipartiteGraph(std::size_t n_left, std::size_t n_right,
                               std::vector<std::pair<NodeId, NodeId>> edges,
                               std::vector<std::string> left_labels,
                               std::vector<std::string> right_labels) {
    if (!left_labels.empty() && left_labels.size() != n_left)
        throw input_error("left label count does not match left node count");
    if (!right_labels.empty() && right_labels.size() != n_right)
        throw input_error("right label count does not match right node count");

    left_adj_.assign(n_left, {});
    right_adj_.assign(n_right, {});
    left_labels_ = std::move(left_labels);
    right_labels_ = std::move(right_labels);

    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [l, r] = edges[i];
        if (l >= n_left)
            throw input_error("left endpoint out of range: " + std::to_string(l));
        if (r >= n_right)
            throw input_error("right endpoint out of range: " + std::to_string(r));
        if (i > 0 && edges[i - 1] == edges[i])
            throw input_error("duplicate bipartite edge " + std::to_string(l) + "-" +
                              std::to_string(r));
        left_adj_[l].push_back(r);
        right_adj_[r].push_back(l);
    }
    edge_count_ = edges.size();
}

std::string BipartiteGraph::left_label(NodeId l) const {
    if (l < left_labels_.size())
        return left_labels_[l];
    return std::to_string(l);
}

std::string BipartiteGraph::right_label(NodeId r) const {
    if (r < right_labels_.size())
        return right_labels_[r];
    return std::to_string(r);
}

} // namespace oropeak
