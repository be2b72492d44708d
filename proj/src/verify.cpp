#include "oropeak/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "oropeak/errors.hpp"
#include "oropeak/pipeline.hpp"
#include "oropeak/random.hpp"
#include "oropeak/synthetic.hpp"

namespace oropeak {

namespace {

WeightedGraph random_instance(std::mt19937_64& gen, std::size_t min_n,
                              std::size_t max_n) {
    std::size_t n = min_n + uniform_below(gen, max_n - min_n + 1);
    std::size_t extra = uniform_below(gen, 2 * n + 1);
    return random_connected_graph(n, extra, gen);
}

std::string describe_records(const std::vector<PeakRecord>& a,
                             const std::vector<PeakRecord>& b) {
    if (a.size() != b.size())
        return "peak counts differ: " + std::to_string(a.size()) + " vs " +
               std::to_string(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const PeakRecord& x = a[i];
        const PeakRecord& y = b[i];
        if (x.peak != y.peak)
            return "peak ids differ at position " + std::to_string(i);
        if (x.is_max != y.is_max)
            return "max flag differs for peak " + std::to_string(x.peak);
        if (x.prominence != y.prominence)
            return "prominence differs for peak " + std::to_string(x.peak);
        if (!x.is_max && x.key_height != y.key_height)
            return "key height differs for peak " + std::to_string(x.peak);
        if (x.key_cols != y.key_cols)
            return "key cols differ for peak " + std::to_string(x.peak);
        if (x.dominators != y.dominators)
            return "dominators differ for peak " + std::to_string(x.peak);
        if (x.triples != y.triples)
            return "triples differ for peak " + std::to_string(x.peak);
    }
    return {};
}

} // namespace

SuiteResult verify_rng_guarantees(std::size_t instances, std::uint64_t seed,
                                std::size_t max_n) {
    SuiteResult result{"rng-connectivity-and-subset", instances, true, {}};
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < instances && result.passed; ++i) {
        WeightedGraph g = random_instance(gen, 5, max_n);
        DistanceOracle oracle(g);
        RngResult pruned = relative_neighborhood_graph(g, oracle);

        if (!pruned.pruned.connected()) {
            result.passed = false;
            result.detail = "instance " + std::to_string(i) + ": pruned graph disconnected";
            break;
        }
        std::set<std::pair<NodeId, NodeId>> original;
        for (const Edge& e : g.edges())
            original.insert({e.u, e.v});
        for (const Edge& e : pruned.pruned.edges())
            if (!original.count({e.u, e.v})) {
                result.passed = false;
                result.detail = "instance " + std::to_string(i) +
                                ": edge not in the input survived pruning";
                break;
            }
        if (pruned.pruned.edge_count() + pruned.removed.size() != g.edge_count()) {
            result.passed = false;
            result.detail = "instance " + std::to_string(i) + ": edge counts inconsistent";
        }
    }
    return result;
}

SuiteResult verify_oracle_equivalence(std::size_t instances, std::uint64_t seed) {
    SuiteResult result{"prominence-oracle-equivalence", instances, true, {}};
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < instances && result.passed; ++i) {
        WeightedGraph g = random_instance(gen, 2, 10);
        HeightMap h = random_heights(g.node_count(), gen);
        DistanceOracle oracle(g);
        // Alternate between the raw and the pruned traversal graph; the
        // equivalence must hold for either.
        RngResult pruned = relative_neighborhood_graph(g, oracle);
        Landscape L = make_landscape(i % 2 == 0 ? pruned.pruned : g, oracle, h);

        auto fast = prominence_all(L);
        auto slow = brute_force_records(L);
        std::string diff = describe_records(fast, slow);
        if (!diff.empty()) {
            result.passed = false;
            result.detail = "instance " + std::to_string(i) + ": " + diff;
        }
    }
    return result;
}

SuiteResult verify_mountain_graph_suite(std::size_t instances, std::uint64_t seed,
                                        std::size_t max_n) {
    SuiteResult result{"mountain-graph-guarantees", instances, true, {}};
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < instances && result.passed; ++i) {
        WeightedGraph g = random_instance(gen, 2, max_n);
        HeightMap h = random_heights(g.node_count(), gen);
        DistanceOracle oracle(g);
        RngResult pruned = relative_neighborhood_graph(g, oracle);
        Landscape L = make_landscape(pruned.pruned, oracle, h);

        auto records = prominence_all(L);
        auto mg = mountain_graph(records);
        auto report = verify_mountain_graph(L, mg, records);
        if (!report.all_passed()) {
            result.passed = false;
            const ClauseResult* failed = nullptr;
            for (const ClauseResult* c : {&report.connected, &report.peaks_preserved,
                                          &report.col_bound, &report.prominence_match})
                if (!c->passed) {
                    failed = c;
                    break;
                }
            result.detail = "instance " + std::to_string(i) + ": " + failed->detail;
        }
    }
    return result;
}

SuiteResult verify_tree_axioms_instance(const WeightedGraph& g, const HeightMap& h,
                                        bool use_rng) {
    SuiteResult result{"line-parent-tree-axioms", 1, true, {}};
    PipelineOptions opts;
    opts.use_rng = use_rng;
    auto run = run_pipeline(g, h, opts);
    const LineParentTree& tree = run->tree;

    auto fail = [&](const std::string& why) {
        result.passed = false;
        result.detail = why;
    };
    if (tree.peaks.empty())
        return fail("tree has no nodes"), result;
    if (tree.root != run->landscape->max_node)
        return fail("root is not the maximum"), result;

    std::size_t edge_count = 0;
    for (std::size_t i = 0; i < tree.peaks.size() && result.passed; ++i) {
        NodeId v = tree.peaks[i];
        if (v == tree.root) {
            if (tree.parent[i])
                fail("the root has a parent");
            continue;
        }
        if (!tree.parent[i]) {
            fail("non-root peak " + std::to_string(v) + " has no parent");
            continue;
        }
        ++edge_count;
        NodeId p = *tree.parent[i];
        if (!height_above(run->heights, p, v))
            fail("parent of peak " + std::to_string(v) + " is not higher");
        // Every line-parent pair must be justified by a peak-graph edge.
        auto key = std::pair(std::min(v, p), std::max(v, p));
        if (!std::binary_search(run->pg.edges.begin(), run->pg.edges.end(), key))
            fail("line-parent pair is not a peak-graph edge");
    }
    if (result.passed && edge_count + 1 != tree.peaks.size())
        fail("edge count is not node count minus one");
    // Acyclicity and connectivity to the root hold iff every depth is
    // consistent with its parent's.
    for (std::size_t i = 0; i < tree.peaks.size() && result.passed; ++i)
        if (tree.parent[i]) {
            auto pi = tree.index_of(*tree.parent[i]);
            if (!pi || tree.depth[i] != tree.depth[*pi] + 1)
                fail("depth of peak " + std::to_string(tree.peaks[i]) +
                     " does not extend its parent's");
        }
    return result;
}

SuiteResult verify_tree_axioms(std::size_t instances, std::uint64_t seed,
                               std::size_t max_n) {
    SuiteResult result{"line-parent-tree-axioms", instances, true, {}};
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < instances && result.passed; ++i) {
        WeightedGraph g = random_instance(gen, 2, max_n);
        HeightMap h = random_heights(g.node_count(), gen);
        SuiteResult one = verify_tree_axioms_instance(g, h, true);
        if (!one.passed) {
            result.passed = false;
            result.detail = "instance " + std::to_string(i) + ": " + one.detail;
        }
    }
    return result;
}

std::vector<SuiteResult> verify_all(std::size_t instances, std::uint64_t seed) {
    std::vector<SuiteResult> results;
    results.push_back(verify_rng_guarantees(instances, child_seed(seed, 1)));
    results.push_back(verify_oracle_equivalence(instances, child_seed(seed, 2)));
    results.push_back(verify_mountain_graph_suite(instances, child_seed(seed, 3)));
    results.push_back(verify_tree_axioms(instances, child_seed(seed, 4)));
    return results;
}

} // namespace oropeak
