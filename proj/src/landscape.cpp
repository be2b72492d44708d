#include "oropeak/landscape.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "oropeak/errors.hpp"
#include "oropeak/parallel.hpp"

namespace oropeak {

namespace {

constexpr NodeId kNone = static_cast<NodeId>(-1);

std::vector<char> peak_mask(const Landscape& L) {
    const std::size_t n = L.traversal.node_count();
    std::vector<char> is_peak(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        bool peak = true;
        for (const Neighbor& nb : L.traversal.neighbors(v))
            if (!L.higher(v, nb.to)) {
                peak = false;
                break;
            }
        is_peak[v] = peak;
    }
    return is_peak;
}

/// Bottleneck labels from v: label[w] = the node at which the best
/// (perturbed-highest) achievable path minimum to w is attained, over
/// walks whose interior avoids `terminal` nodes. Terminals receive labels
/// but are never expanded.
std::vector<NodeId> bottleneck_labels(const Landscape& L, NodeId v,
                                      const std::vector<char>& terminal) {
    const std::size_t n = L.traversal.node_count();
    std::vector<NodeId> label(n, kNone);
    std::vector<char> settled(n, 0);

    // Max-heap on the perturbed height of the label node.
    auto worse = [&](const std::pair<NodeId, NodeId>& a,
                     const std::pair<NodeId, NodeId>& b) {
        return L.higher(b.first, a.first);
    };
    std::priority_queue<std::pair<NodeId, NodeId>,
                        std::vector<std::pair<NodeId, NodeId>>, decltype(worse)>
        heap(worse);

    label[v] = v;
    heap.push({v, v});
    while (!heap.empty()) {
        auto [lab, x] = heap.top();
        heap.pop();
        if (settled[x] || label[x] != lab)
            continue;
        settled[x] = 1;
        if (terminal[x])
            continue; // absorbed: a valid endpoint, never an interior node
        for (const Neighbor& nb : L.traversal.neighbors(x)) {
            NodeId y = nb.to;
            if (settled[y])
                continue;
            NodeId cand = L.higher(lab, y) ? y : lab; // lower of the two
            if (label[y] == kNone || L.higher(cand, label[y])) {
                label[y] = cand;
                heap.push({cand, y});
            }
        }
    }
    return label;
}

PeakRecord record_for_peak(const Landscape& L, NodeId v,
                           const std::vector<char>& is_peak) {
    const std::size_t n = L.traversal.node_count();
    PeakRecord rec;
    rec.peak = v;
    if (v == L.max_node) {
        rec.is_max = true;
        rec.prominence = L.h(v);
        return rec;
    }

    // Higher peaks end ascending paths and may not appear inside them.
    std::vector<char> terminal(n, 0);
    for (NodeId w = 0; w < n; ++w)
        terminal[w] = is_peak[w] && L.higher(w, v);

    auto label = bottleneck_labels(L, v, terminal);

    // Best path minimum over all terminals: its raw height is the key
    // height, and the terminals attaining it raw-wise are the dominators.
    NodeId best = kNone;
    for (NodeId w = 0; w < n; ++w)
        if (terminal[w] && label[w] != kNone &&
            (best == kNone || L.higher(label[w], best)))
            best = label[w];
    if (best == kNone)
        throw internal_error("no higher peak reachable from peak " +
                             std::to_string(v));
    rec.key_height = L.h(best);
    rec.prominence = L.h(v) - rec.key_height;
    for (NodeId w = 0; w < n; ++w)
        if (terminal[w] && label[w] != kNone && L.h(label[w]) == rec.key_height)
            rec.dominators.push_back(w);

    if (L.h(v) == rec.key_height) {
        // The peak itself bottoms every optimal path (it is visited first
        // among minima), so it is its own single key col.
        rec.key_cols.push_back(v);
        for (NodeId w : rec.dominators)
            rec.triples.push_back({v, v, w});
        return rec;
    }

    // Region reachable from v through nodes strictly above the key height:
    // exactly the possible prefixes before a key col is first visited.
    std::vector<char> before(n, 0);
    {
        std::vector<NodeId> stack{v};
        before[v] = 1;
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (const Neighbor& nb : L.traversal.neighbors(x)) {
                NodeId y = nb.to;
                if (!before[y] && !terminal[y] && L.h(y) > rec.key_height) {
                    before[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }

    // A node at exactly the key height is a key col iff some such prefix
    // reaches it and it reaches a higher peak through nodes that never dip
    // below the key height again.
    std::vector<char> visited(n, 0);
    std::vector<NodeId> stack;
    for (NodeId u = 0; u < n; ++u) {
        if (L.h(u) != rec.key_height)
            continue;
        bool entered = false;
        for (const Neighbor& nb : L.traversal.neighbors(u))
            if (before[nb.to]) {
                entered = true;
                break;
            }
        if (!entered)
            continue;

        std::fill(visited.begin(), visited.end(), 0);
        std::vector<NodeId> reached;
        stack.assign(1, u);
        visited[u] = 1;
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (const Neighbor& nb : L.traversal.neighbors(x)) {
                NodeId y = nb.to;
                if (visited[y] || y == v)
                    continue;
                visited[y] = 1;
                if (terminal[y])
                    reached.push_back(y);
                else if (L.h(y) >= rec.key_height)
                    stack.push_back(y);
            }
        }
        if (reached.empty())
            continue;
        rec.key_cols.push_back(u);
        std::sort(reached.begin(), reached.end());
        for (NodeId w : reached) {
            if (L.h(label[w]) != rec.key_height)
                throw internal_error("endpoint reached from a key col is not a dominator");
            rec.triples.push_back({v, u, w});
        }
    }
    if (rec.key_cols.empty())
        throw internal_error("no key col found for peak " + std::to_string(v));
    std::sort(rec.triples.begin(), rec.triples.end());
    return rec;
}

} // namespace

Landscape make_landscape(const WeightedGraph& traversal, DistanceOracle& metric,
                         const HeightMap& heights) {
    if (traversal.node_count() == 0)
        throw input_error("landscape requires at least one node");
    validate_heights(traversal, heights);
    if (!traversal.connected())
        throw input_error("landscape traversal graph must be connected");
    NodeId max_node = 0;
    for (NodeId v = 1; v < traversal.node_count(); ++v)
        if (height_above(heights, v, max_node))
            max_node = v;
    return Landscape{traversal, metric, heights, max_node};
}

std::vector<NodeId> peaks(const Landscape& L) {
    auto mask = peak_mask(L);
    std::vector<NodeId> result;
    for (NodeId v = 0; v < mask.size(); ++v)
        if (mask[v])
            result.push_back(v);
    return result;
}

PeakRecord key_cols_and_dominators(const Landscape& L, NodeId v) {
    auto mask = peak_mask(L);
    if (v >= mask.size() || !mask[v])
        throw input_error("node " + std::to_string(v) + " is not a peak");
    if (v == L.max_node)
        throw input_error("the maximum has no key cols; its prominence is its height");
    return record_for_peak(L, v, mask);
}

std::vector<PeakRecord> prominence_all(const Landscape& L, unsigned threads) {
    auto mask = peak_mask(L);
    std::vector<NodeId> peak_ids;
    for (NodeId v = 0; v < mask.size(); ++v)
        if (mask[v])
            peak_ids.push_back(v);

    std::vector<PeakRecord> records(peak_ids.size());
    parallel_for(peak_ids.size(), threads,
                 [&](std::size_t i) { records[i] = record_for_peak(L, peak_ids[i], mask); });
    return records;
}

} // namespace oropeak
