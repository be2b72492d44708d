#include "oropeak/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>

#include "oropeak/distance.hpp"
#include "oropeak/errors.hpp"
#include "oropeak/fmt.hpp"
#include "oropeak/random.hpp"

namespace oropeak {

namespace {

constexpr double kSimilarityFloor = 1e-9;

std::string opt_csv(const std::optional<double>& v) {
    return v ? fmt_double(*v) : std::string("null");
}

double similarity(double weight) {
    double s = 1.0 - weight;
    return s > 0.0 ? s : kSimilarityFloor;
}

} // namespace

std::string stats_row_csv(const StatsRow& row) {
    std::string out = row.name;
    out += ',';
    out += std::to_string(row.n_nodes);
    out += ',';
    out += opt_csv(row.density);
    out += ',';
    out += opt_csv(row.rng_density);
    out += ',';
    out += std::to_string(row.n_mg);
    out += ',';
    out += opt_csv(row.mg_density);
    out += ',';
    out += std::to_string(row.n_lp);
    out += ',';
    out += std::to_string(row.tree_width);
    out += ',';
    out += std::to_string(row.tree_depth);
    return out;
}

std::optional<MspdSummary> mspd(const WeightedGraph& g,
                                const std::vector<NodeId>& targets) {
    if (targets.empty())
        throw input_error("MSPD needs at least one target node");
    std::vector<char> is_target(g.node_count(), 0);
    for (NodeId t : targets) {
        if (t >= g.node_count())
            throw input_error("MSPD target " + std::to_string(t) + " out of range");
        is_target[t] = 1;
    }

    // Multi-source Dijkstra: all targets start at distance 0.
    std::vector<double> dist(g.node_count(), kUnreachable);
    std::priority_queue<std::pair<double, NodeId>,
                        std::vector<std::pair<double, NodeId>>, std::greater<>>
        heap;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (is_target[v]) {
            dist[v] = 0.0;
            heap.push({0.0, v});
        }
    while (!heap.empty()) {
        auto [dv, v] = heap.top();
        heap.pop();
        if (dv > dist[v])
            continue;
        for (const Neighbor& nb : g.neighbors(v)) {
            double cand = dv + nb.weight;
            if (cand < dist[nb.to]) {
                dist[nb.to] = cand;
                heap.push({cand, nb.to});
            }
        }
    }

    std::vector<double> values;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!is_target[v])
            values.push_back(dist[v]);
    if (values.empty())
        return std::nullopt;
    for (double v : values)
        if (!reachable(v))
            throw input_error("a node cannot reach any target; graph disconnected");

    std::sort(values.begin(), values.end());
    MspdSummary s;
    s.count = values.size();
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(values.size());
    std::size_t mid = values.size() / 2;
    s.median = values.size() % 2 == 1 ? values[mid]
                                      : 0.5 * (values[mid - 1] + values[mid]);
    s.max = values.back();
    return s;
}

std::vector<NodeId> top_n_highest(const HeightMap& h, std::size_t n) {
    if (n > h.size())
        throw input_error("asked for " + std::to_string(n) + " highest of " +
                          std::to_string(h.size()) + " nodes");
    std::vector<NodeId> order(h.size());
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n),
                      order.end(),
                      [&](NodeId a, NodeId b) { return height_above(h, a, b); });
    order.resize(n);
    std::sort(order.begin(), order.end());
    return order;
}

std::vector<std::size_t> edge_sampling_indices(const WeightedGraph& g,
                                               std::size_t m, std::uint64_t seed) {
    if (m > g.edge_count())
        throw input_error("cannot sample " + std::to_string(m) + " of " +
                          std::to_string(g.edge_count()) + " edges");
    bool any_below_one = false;
    for (const Edge& e : g.edges())
        if (e.weight < 1.0) {
            any_below_one = true;
            break;
        }
    if (!any_below_one)
        throw input_error("edge sampling needs weights below 1 (similarity 1-w)");

    std::vector<double> weights;
    weights.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        weights.push_back(similarity(e.weight));

    std::mt19937_64 gen(seed);
    return weighted_sample_without_replacement(weights, m, gen);
}

SampledGraph edge_sampling_baseline(const WeightedGraph& g, std::size_t m,
                                    std::uint64_t seed) {
    auto picked = edge_sampling_indices(g, m, seed);
    std::vector<Edge> edges;
    edges.reserve(picked.size());
    for (std::size_t i : picked)
        edges.push_back(g.edges()[i]);
    WeightedGraph sampled(g.node_count(), std::move(edges), g.labels());
    auto comp = largest_component(sampled);
    return {std::move(comp.graph), std::move(comp.to_original)};
}

std::vector<double> pagerank(const WeightedGraph& g, bool weighted) {
    const std::size_t n = g.node_count();
    if (n == 0)
        throw input_error("PageRank on an empty graph");
    constexpr double kDamping = 0.85;
    constexpr double kTolerance = 1e-10;
    constexpr std::size_t kMaxIterations = 10000;

    // Out-strength per node; transition u->v carries strength(u,v)/out(u).
    std::vector<double> out(n, 0.0);
    for (NodeId v = 0; v < n; ++v)
        for (const Neighbor& nb : g.neighbors(v))
            out[v] += weighted ? similarity(nb.weight) : 1.0;

    std::vector<double> rank(n, 1.0 / static_cast<double>(n)), next(n);
    for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
        double dangling = 0.0;
        for (NodeId v = 0; v < n; ++v)
            if (out[v] == 0.0)
                dangling += rank[v];
        double base = (1.0 - kDamping + kDamping * dangling) / static_cast<double>(n);
        std::fill(next.begin(), next.end(), base);
        for (NodeId v = 0; v < n; ++v) {
            if (out[v] == 0.0)
                continue;
            double share = kDamping * rank[v] / out[v];
            for (const Neighbor& nb : g.neighbors(v))
                next[nb.to] += share * (weighted ? similarity(nb.weight) : 1.0);
        }
        double delta = 0.0;
        for (NodeId v = 0; v < n; ++v)
            delta += std::abs(next[v] - rank[v]);
        rank.swap(next);
        if (delta < kTolerance)
            return rank;
    }
    throw internal_error("PageRank did not converge");
}

SampledGraph pagerank_node_sampling(const WeightedGraph& g, std::size_t k,
                                    std::uint64_t seed, bool weighted) {
    if (k > g.node_count())
        throw input_error("cannot sample " + std::to_string(k) + " of " +
                          std::to_string(g.node_count()) + " nodes");
    auto rank = pagerank(g, weighted);
    std::mt19937_64 gen(seed);
    auto picked = weighted_sample_without_replacement(rank, k, gen);

    std::vector<NodeId> nodes;
    nodes.reserve(picked.size());
    for (std::size_t i : picked)
        nodes.push_back(static_cast<NodeId>(i));
    WeightedGraph sub = induced_subgraph(g, nodes);
    auto comp = largest_component(sub);
    // Chain the two relabelings back to the input graph's ids.
    for (NodeId& v : comp.to_original)
        v = nodes[v];
    return {std::move(comp.graph), std::move(comp.to_original)};
}

} // namespace oropeak
