#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "oropeak/errors.hpp"
#include "oropeak/landscape.hpp"

namespace oropeak {

namespace {

/// Calls `emit(col, min_height, endpoint)` for every ascending path of v:
/// a simple path to a strictly higher peak containing no higher peak in
/// between. The col is the first node of the path attaining the raw
/// minimum. Plain depth-first enumeration; exponential, oracle-only.
template <typename Emit>
void enumerate_ascending_paths(const Landscape& L, NodeId v,
                               const std::vector<char>& is_peak, Emit&& emit) {
    const std::size_t n = L.traversal.node_count();
    if (n > kBruteForceNodeLimit)
        throw input_error("brute-force oracle limited to " +
                          std::to_string(kBruteForceNodeLimit) + " nodes, got " +
                          std::to_string(n));

    std::vector<char> on_path(n, 0);
    std::vector<NodeId> path{v};
    on_path[v] = 1;

    auto path_col_and_min = [&]() {
        NodeId col = path.front();
        double min_h = L.h(col);
        for (NodeId x : path)
            if (L.h(x) < min_h) {
                min_h = L.h(x);
                col = x;
            }
        return std::pair(col, min_h);
    };

    auto dfs = [&](auto&& self, NodeId x) -> void {
        for (const Neighbor& nb : L.traversal.neighbors(x)) {
            NodeId y = nb.to;
            if (on_path[y])
                continue;
            path.push_back(y);
            if (is_peak[y] && L.higher(y, v)) {
                // Endpoint reached; a higher peak may not be an interior
                // node, so the path cannot be extended past it.
                auto [col, min_h] = path_col_and_min();
                emit(col, min_h, y);
            } else {
                on_path[y] = 1;
                self(self, y);
                on_path[y] = 0;
            }
            path.pop_back();
        }
    };
    dfs(dfs, v);
}

} // namespace

std::vector<PeakRecord> brute_force_records(const Landscape& L) {
    const std::size_t n = L.traversal.node_count();
    std::vector<char> is_peak(n, 0);
    for (NodeId p : peaks(L))
        is_peak[p] = 1;

    std::vector<PeakRecord> records;
    for (NodeId v = 0; v < n; ++v) {
        if (!is_peak[v])
            continue;
        PeakRecord rec;
        rec.peak = v;
        if (v == L.max_node) {
            rec.is_max = true;
            rec.prominence = L.h(v);
            records.push_back(rec);
            continue;
        }

        bool any = false;
        double key_height = 0.0;
        std::vector<std::tuple<double, NodeId, NodeId>> found; // (min, col, end)
        enumerate_ascending_paths(L, v, is_peak,
                                  [&](NodeId col, double min_h, NodeId end) {
                                      found.emplace_back(min_h, col, end);
                                      if (!any || min_h > key_height) {
                                          any = true;
                                          key_height = min_h;
                                      }
                                  });
        if (!any)
            throw internal_error("peak " + std::to_string(v) +
                                 " has no ascending path in a connected landscape");

        rec.key_height = key_height;
        rec.prominence = L.h(v) - key_height;
        std::set<NodeId> cols, doms;
        std::set<Triple> triples;
        for (const auto& [min_h, col, end] : found)
            if (min_h == key_height) {
                cols.insert(col);
                doms.insert(end);
                triples.insert({v, col, end});
            }
        rec.key_cols.assign(cols.begin(), cols.end());
        rec.dominators.assign(doms.begin(), doms.end());
        rec.triples.assign(triples.begin(), triples.end());
        records.push_back(rec);
    }
    return records;
}

std::vector<NodeId> brute_force_all_cols(const Landscape& L, NodeId v) {
    const std::size_t n = L.traversal.node_count();
    std::vector<char> is_peak(n, 0);
    for (NodeId p : peaks(L))
        is_peak[p] = 1;
    if (v >= n || !is_peak[v])
        throw input_error("node " + std::to_string(v) + " is not a peak");

    std::set<NodeId> cols;
    enumerate_ascending_paths(L, v, is_peak,
                              [&](NodeId col, double, NodeId) { cols.insert(col); });
    return {cols.begin(), cols.end()};
}

} // namespace oropeak
