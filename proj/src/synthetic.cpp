#include "oropeak/synthetic.hpp"

#include <algorithm>
#include <set>

#include "oropeak/errors.hpp"
#include "oropeak/random.hpp"

namespace oropeak {

namespace {

double positive_uniform(std::mt19937_64& gen) {
    double u;
    do {
        u = uniform01(gen);
    } while (u == 0.0);
    return u;
}

} // namespace

WeightedGraph random_connected_graph(std::size_t n, std::size_t extra_edges,
                                     std::mt19937_64& gen) {
    if (n == 0)
        throw input_error("random graph needs at least one node");

    std::vector<Edge> edges;
    std::set<std::pair<NodeId, NodeId>> used;
    auto add = [&](NodeId u, NodeId v) {
        if (u > v)
            std::swap(u, v);
        if (!used.insert({u, v}).second)
            return false;
        edges.push_back({u, v, positive_uniform(gen)});
        return true;
    };

    // Random recursive tree keeps everything connected.
    for (NodeId v = 1; v < n; ++v)
        add(static_cast<NodeId>(uniform_below(gen, v)), v);

    const std::size_t max_edges = n * (n - 1) / 2;
    extra_edges = std::min(extra_edges, max_edges - edges.size());
    std::size_t added = 0;
    while (added < extra_edges) {
        NodeId u = static_cast<NodeId>(uniform_below(gen, n));
        NodeId v = static_cast<NodeId>(uniform_below(gen, n));
        if (u != v && add(u, v))
            ++added;
    }
    return WeightedGraph(n, std::move(edges));
}

HeightMap random_heights(std::size_t n, std::mt19937_64& gen) {
    HeightMap h;
    h.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        h.values.push_back(uniform01(gen));
    return h;
}

} // namespace oropeak
