#include "oropeak/distance.hpp"

#include <algorithm>
#include <queue>

namespace oropeak {

namespace {

using HeapEntry = std::pair<double, NodeId>; // (distance, node), min-heap

std::vector<double> dijkstra_impl(const WeightedGraph& g, NodeId source,
                                  const std::vector<char>* target_mask,
                                  std::size_t target_count) {
    std::vector<double> dist(g.node_count(), kUnreachable);
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    dist[source] = 0.0;
    heap.push({0.0, source});
    std::size_t remaining = target_count;

    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v])
            continue; // stale entry
        if (target_mask && (*target_mask)[v] && --remaining == 0)
            break;
        for (const Neighbor& nb : g.neighbors(v)) {
            double cand = d + nb.weight;
            if (cand < dist[nb.to]) {
                dist[nb.to] = cand;
                heap.push({cand, nb.to});
            }
        }
    }
    return dist;
}

} // namespace

std::vector<double> dijkstra_row(const WeightedGraph& g, NodeId source) {
    return dijkstra_impl(g, source, nullptr, 0);
}

std::vector<double> dijkstra_to_targets(const WeightedGraph& g, NodeId source,
                                        const std::vector<NodeId>& targets) {
    std::vector<char> mask(g.node_count(), 0);
    std::size_t count = 0;
    for (NodeId t : targets)
        if (!mask[t]) {
            mask[t] = 1;
            ++count;
        }
    if (count == 0)
        return dijkstra_impl(g, source, nullptr, 0);
    return dijkstra_impl(g, source, &mask, count);
}

DistanceOracle::DistanceOracle(const WeightedGraph& g, std::size_t max_rows)
    : g_(g), max_rows_(max_rows) {
    if (max_rows_ == 0) {
        // Full all-pairs caching is ~n^2 doubles; cap the default so huge
        // graphs degrade to a working set instead of exhausting memory.
        constexpr std::size_t kFullCacheNodeLimit = 20000;
        max_rows_ = g.node_count() <= kFullCacheNodeLimit
                        ? std::max<std::size_t>(g.node_count(), 1)
                        : 64;
    }
}

std::shared_ptr<const std::vector<double>> DistanceOracle::row(NodeId source) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(source);
        if (it != cache_.end()) {
            lru_.splice(lru_.begin(), lru_, it->second.second);
            return it->second.first;
        }
    }
    // Compute outside the lock; concurrent misses on the same row may
    // duplicate work but stay correct.
    auto fresh = std::make_shared<const std::vector<double>>(dijkstra_row(g_, source));
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(source);
    if (it != cache_.end()) {
        lru_.splice(lru_.begin(), lru_, it->second.second);
        return it->second.first;
    }
    while (cache_.size() >= max_rows_ && !lru_.empty()) {
        cache_.erase(lru_.back());
        lru_.pop_back();
    }
    lru_.push_front(source);
    cache_.emplace(source, std::make_pair(fresh, lru_.begin()));
    return fresh;
}

} // namespace oropeak
