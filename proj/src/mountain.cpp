#include "oropeak/mountain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "oropeak/errors.hpp"
#include "oropeak/fmt.hpp"

namespace oropeak {

WeightedGraph MountainGraph::as_weighted_graph() const {
    std::vector<Edge> gedges;
    gedges.reserve(edges.size());
    for (auto [a, b] : edges) {
        auto ia = index_of(a), ib = index_of(b);
        if (!ia || !ib)
            throw internal_error("mountain-graph edge endpoint missing from node list");
        gedges.push_back({static_cast<NodeId>(*ia), static_cast<NodeId>(*ib), 1.0});
    }
    return WeightedGraph(nodes.size(), std::move(gedges));
}

std::optional<std::size_t> MountainGraph::index_of(NodeId original) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), original);
    if (it == nodes.end() || *it != original)
        return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
}

MountainGraph mountain_graph(const std::vector<PeakRecord>& records) {
    std::set<NodeId> peak_set, col_set;
    std::set<std::pair<NodeId, NodeId>> edge_set;
    for (const PeakRecord& rec : records) {
        peak_set.insert(rec.peak);
        for (NodeId u : rec.key_cols)
            col_set.insert(u);
        for (const Triple& t : rec.triples) {
            auto add = [&](NodeId a, NodeId b) {
                if (a == b)
                    return; // degenerate pair from a peak that is its own col
                edge_set.insert({std::min(a, b), std::max(a, b)});
            };
            add(t.peak, t.col);
            add(t.col, t.endpoint);
        }
    }
    // Under height ties a node can hold both roles (a prominence-zero peak
    // is its own key col; a key col can itself be a peak). The node set is
    // the plain union and peak-ness wins the label.
    std::set<NodeId> node_set = peak_set;
    node_set.insert(col_set.begin(), col_set.end());

    MountainGraph mg;
    for (NodeId v : node_set) {
        mg.nodes.push_back(v);
        mg.roles.push_back(peak_set.count(v) ? Role::Peak : Role::KeyCol);
    }
    mg.edges.assign(edge_set.begin(), edge_set.end());
    return mg;
}

bool MountainGraphReport::all_passed() const {
    return connected.passed && peaks_preserved.passed && col_bound.passed &&
           prominence_match.passed;
}

MountainGraphReport verify_mountain_graph(const Landscape& L, const MountainGraph& mg,
                                     const std::vector<PeakRecord>& records) {
    MountainGraphReport report;
    WeightedGraph mg_graph = mg.as_weighted_graph();

    if (!mg_graph.connected()) {
        report.connected.passed = false;
        report.connected.detail = "mountain graph is disconnected";
    }

    // Peaks of the mountain graph seen as its own landscape. Restricted
    // heights keep original values; reindexed ids preserve ascending order,
    // so perturbed comparisons agree with the full landscape's.
    {
        HeightMap restricted;
        restricted.values.reserve(mg.nodes.size());
        for (NodeId v : mg.nodes)
            restricted.values.push_back(L.h(v));

        std::set<NodeId> mg_peaks;
        for (NodeId local = 0; local < mg.nodes.size(); ++local) {
            bool peak = true;
            for (const Neighbor& nb : mg_graph.neighbors(local))
                if (!height_above(restricted, local, nb.to)) {
                    peak = false;
                    break;
                }
            if (peak)
                mg_peaks.insert(mg.nodes[local]);
        }
        std::set<NodeId> original_peaks;
        for (const PeakRecord& rec : records)
            original_peaks.insert(rec.peak);
        if (mg_peaks != original_peaks) {
            report.peaks_preserved.passed = false;
            report.peaks_preserved.detail =
                "peak sets differ: " + std::to_string(original_peaks.size()) +
                " in the landscape vs " + std::to_string(mg_peaks.size()) +
                " in the mountain graph";
        }
    }

    // For each non-max peak v, cols u adjacent to v in MG that also touch
    // something strictly higher than v. These drive clauses 3 and 4.
    auto prominent_neighbors = [&](NodeId v) {
        std::vector<NodeId> result;
        auto iv = mg.index_of(v);
        if (!iv)
            return result;
        for (const Neighbor& nb : mg_graph.neighbors(static_cast<NodeId>(*iv))) {
            if (mg.roles[nb.to] != Role::KeyCol)
                continue;
            bool has_higher = false;
            for (const Neighbor& nb2 : mg_graph.neighbors(nb.to))
                if (L.h(mg.nodes[nb2.to]) > L.h(v)) {
                    has_higher = true;
                    break;
                }
            if (has_higher)
                result.push_back(mg.nodes[nb.to]);
        }
        return result;
    };

    if (L.traversal.node_count() <= kBruteForceNodeLimit) {
        for (const PeakRecord& rec : records) {
            if (rec.is_max)
                continue;
            auto all_cols = brute_force_all_cols(L, rec.peak);
            for (NodeId u : prominent_neighbors(rec.peak)) {
                bool dominated = false;
                for (NodeId c : all_cols)
                    if (L.h(c) >= L.h(u)) {
                        dominated = true;
                        break;
                    }
                if (!dominated) {
                    report.col_bound.passed = false;
                    report.col_bound.detail =
                        "col " + std::to_string(u) + " next to peak " +
                        std::to_string(rec.peak) + " exceeds every col of that peak";
                    break;
                }
            }
            if (!report.col_bound.passed)
                break;
        }
    } else {
        report.col_bound.detail = "skipped: graph exceeds the oracle size limit";
    }

    for (const PeakRecord& rec : records) {
        if (rec.is_max)
            continue;
        auto candidates = prominent_neighbors(rec.peak);
        if (candidates.empty()) {
            report.prominence_match.passed = false;
            report.prominence_match.detail = "peak " + std::to_string(rec.peak) +
                                             " has no prominence-defining col in MG";
            break;
        }
        double best = L.h(rec.peak) - L.h(candidates.front());
        for (NodeId u : candidates)
            best = std::min(best, L.h(rec.peak) - L.h(u));
        if (best != rec.prominence) {
            report.prominence_match.passed = false;
            report.prominence_match.detail =
                "peak " + std::to_string(rec.peak) + ": MG yields " + fmt_double(best) +
                ", records say " + fmt_double(rec.prominence);
            break;
        }
    }
    return report;
}

PeakGraph peak_graph(const std::vector<PeakRecord>& records) {
    PeakGraph pg;
    std::set<std::pair<NodeId, NodeId>> edge_set;
    std::set<Triple> triple_set;
    for (const PeakRecord& rec : records) {
        pg.peaks.push_back(rec.peak);
        for (const Triple& t : rec.triples) {
            edge_set.insert({std::min(t.peak, t.endpoint), std::max(t.peak, t.endpoint)});
            triple_set.insert(t);
        }
    }
    std::sort(pg.peaks.begin(), pg.peaks.end());
    pg.edges.assign(edge_set.begin(), edge_set.end());
    pg.triples.assign(triple_set.begin(), triple_set.end());
    return pg;
}

std::optional<std::size_t> LineParentTree::index_of(NodeId peak) const {
    auto it = std::lower_bound(peaks.begin(), peaks.end(), peak);
    if (it == peaks.end() || *it != peak)
        return std::nullopt;
    return static_cast<std::size_t>(it - peaks.begin());
}

LineParentTree line_parent_tree(const PeakGraph& pg, DistanceOracle& d,
                                const HeightMap& h, NodeId max_node) {
    LineParentTree tree;
    tree.root = max_node;
    tree.peaks = pg.peaks;
    tree.parent.assign(pg.peaks.size(), std::nullopt);
    tree.via_col.assign(pg.peaks.size(), std::nullopt);
    tree.depth.assign(pg.peaks.size(), 0);

    // Triples grouped per peak; pg.triples is sorted, so groups are runs.
    std::size_t i = 0;
    while (i < pg.triples.size()) {
        NodeId v = pg.triples[i].peak;
        std::size_t begin = i;
        while (i < pg.triples.size() && pg.triples[i].peak == v)
            ++i;

        // Stage 1: per key col, the endpoint closest to that col; at equal
        // distance the higher endpoint, then the smaller id.
        std::map<NodeId, Triple> best_per_col;
        for (std::size_t k = begin; k < i; ++k) {
            const Triple& t = pg.triples[k];
            auto it = best_per_col.find(t.col);
            if (it == best_per_col.end()) {
                best_per_col.emplace(t.col, t);
                continue;
            }
            const Triple& cur = it->second;
            double dt = d.distance(t.col, t.endpoint);
            double dc = d.distance(cur.col, cur.endpoint);
            bool better = dt < dc ||
                          (dt == dc && (h.values[t.endpoint] > h.values[cur.endpoint] ||
                                        (h.values[t.endpoint] == h.values[cur.endpoint] &&
                                         t.endpoint < cur.endpoint)));
            if (better)
                it->second = t;
        }

        // Stage 2: the surviving triple whose col is closest to the peak;
        // ties by the col-to-endpoint distance, then col id, then endpoint id.
        const Triple* winner = nullptr;
        for (const auto& [col, t] : best_per_col) {
            if (!winner) {
                winner = &t;
                continue;
            }
            double dv_t = d.distance(v, t.col);
            double dv_w = d.distance(v, winner->col);
            if (dv_t != dv_w) {
                if (dv_t < dv_w)
                    winner = &t;
                continue;
            }
            double de_t = d.distance(t.col, t.endpoint);
            double de_w = d.distance(winner->col, winner->endpoint);
            if (de_t != de_w) {
                if (de_t < de_w)
                    winner = &t;
                continue;
            }
            if (t.col != winner->col) {
                if (t.col < winner->col)
                    winner = &t;
                continue;
            }
            if (t.endpoint < winner->endpoint)
                winner = &t;
        }

        auto idx = tree.index_of(v);
        if (!idx)
            throw internal_error("triples name a peak missing from the peak graph");
        tree.parent[*idx] = winner->endpoint;
        tree.via_col[*idx] = winner->col;
    }

    // Depths by walking parent chains; every chain must end at the root.
    for (std::size_t k = 0; k < tree.peaks.size(); ++k) {
        std::uint32_t steps = 0;
        std::size_t cur = k;
        while (tree.parent[cur]) {
            auto next = tree.index_of(*tree.parent[cur]);
            if (!next)
                throw internal_error("line parent is not a peak");
            cur = *next;
            ++steps;
            if (steps > tree.peaks.size())
                throw internal_error("line-parent chain contains a cycle");
        }
        if (tree.peaks[cur] != tree.root)
            throw internal_error("line-parent chain of peak " +
                                 std::to_string(tree.peaks[k]) +
                                 " does not end at the maximum");
        tree.depth[k] = steps;
    }
    return tree;
}

TreeStats tree_stats(const LineParentTree& t) {
    TreeStats stats;
    stats.nodes = t.peaks.size();
    std::map<std::uint32_t, std::size_t> per_depth;
    for (std::uint32_t d : t.depth) {
        ++per_depth[d];
        stats.depth = std::max<std::size_t>(stats.depth, d);
    }
    for (const auto& [depth, count] : per_depth)
        stats.width = std::max(stats.width, count);
    return stats;
}

} // namespace oropeak
