#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "oropeak/distance.hpp"
#include "oropeak/errors.hpp"
#include "oropeak/landscape.hpp"
#include "oropeak/mountain.hpp"
#include "oropeak/random.hpp"
#include "oropeak/serialize.hpp"
#include "oropeak/synthetic.hpp"
#include "oropeak/verify.hpp"
#include "support/test_support.hpp"

using namespace oropeak;
using test::make_graph;
using test::make_heights;

namespace {

struct Instance {
    WeightedGraph graph;
    DistanceOracle oracle;
    HeightMap heights;
    Landscape landscape;
    std::vector<PeakRecord> records;

    Instance(WeightedGraph g, HeightMap h)
        : graph(std::move(g)), oracle(graph), heights(std::move(h)),
          landscape(make_landscape(graph, oracle, heights)),
          records(prominence_all(landscape)) {}
};

Instance path_instance() {
    return Instance(make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}),
                    make_heights({3, 1, 5}));
}

} // namespace

TEST_CASE("the path landscape condenses to a three-node mountain graph") {
    Instance in = path_instance();
    MountainGraph mg = mountain_graph(in.records);
    CHECK(mg.nodes == std::vector<NodeId>{0, 1, 2});
    CHECK(mg.roles == std::vector<Role>{Role::Peak, Role::KeyCol, Role::Peak});
    REQUIRE(mg.edges.size() == 2);
    CHECK(mg.edges[0] == std::pair<NodeId, NodeId>{0, 1});
    CHECK(mg.edges[1] == std::pair<NodeId, NodeId>{1, 2});
    CHECK(mg.as_weighted_graph().connected());
}

TEST_CASE("a single-peak landscape gives a one-node mountain graph") {
    Instance in(make_graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}}),
                make_heights({1, 2, 3, 4}));
    MountainGraph mg = mountain_graph(in.records);
    CHECK(mg.nodes == std::vector<NodeId>{3});
    CHECK(mg.edges.empty());
}

TEST_CASE("a prominence-zero peak keeps the peak role and drops its self-pair") {
    // Equal heights force a prominence-zero peak whose key col is itself:
    // node 1's defining triple is (1, 1, 0). The {1,1} pair adds no edge
    // and node 1 stays labelled as a peak.
    Instance in(make_graph(3, {{0, 2, 1.0}, {2, 1, 1.0}}), make_heights({5, 5, 5}));
    MountainGraph mg = mountain_graph(in.records);
    CHECK(mg.nodes == std::vector<NodeId>{0, 1});
    CHECK(mg.roles == std::vector<Role>{Role::Peak, Role::Peak});
    REQUIRE(mg.edges.size() == 1);
    CHECK(mg.edges[0] == std::pair<NodeId, NodeId>{0, 1});
    CHECK(mg.as_weighted_graph().connected());
}

TEST_CASE("the mountain-graph guarantees hold on the path instance") {
    Instance in = path_instance();
    MountainGraph mg = mountain_graph(in.records);
    MountainGraphReport report = verify_mountain_graph(in.landscape, mg, in.records);
    CHECK(report.connected.passed);
    CHECK(report.peaks_preserved.passed);
    CHECK(report.col_bound.passed);
    CHECK(report.prominence_match.passed);
    CHECK(report.all_passed());
}

TEST_CASE("the mountain-graph guarantees hold on random instances") {
    SuiteResult small = verify_mountain_graph_suite(120, 31, 10);
    INFO(small.detail);
    CHECK(small.passed);
    SuiteResult mid = verify_mountain_graph_suite(20, 32, 120);
    INFO(mid.detail);
    CHECK(mid.passed);
}

TEST_CASE("the peak graph keeps one edge and one triple per witness") {
    Instance in = path_instance();
    PeakGraph pg = peak_graph(in.records);
    CHECK(pg.peaks == std::vector<NodeId>{0, 2});
    REQUIRE(pg.edges.size() == 1);
    CHECK(pg.edges[0] == std::pair<NodeId, NodeId>{0, 2});
    REQUIRE(pg.triples.size() == 1);
    CHECK(pg.triples[0] == Triple{0, 1, 2});

    Instance single(make_graph(2, {{0, 1, 1.0}}), make_heights({1, 2}));
    PeakGraph empty = peak_graph(single.records);
    CHECK(empty.peaks == std::vector<NodeId>{1});
    CHECK(empty.edges.empty());
}

TEST_CASE("the path landscape's line parent is the higher peak") {
    Instance in = path_instance();
    PeakGraph pg = peak_graph(in.records);
    LineParentTree tree = line_parent_tree(pg, in.oracle, in.heights, in.landscape.max_node);
    CHECK(tree.root == 2);
    CHECK(tree.peaks == std::vector<NodeId>{0, 2});
    REQUIRE(tree.parent.size() == 2);
    CHECK(tree.parent[0] == 2);   // a's parent is c
    CHECK(tree.via_col[0] == 1);  // through b
    CHECK(tree.depth[0] == 1);
    CHECK(tree.depth[1] == 0);
}

TEST_CASE("equal peak distances fall back to the closer endpoint's col") {
    // v(8) reaches two cols at distance 1; the col whose dominator sits
    // closer (u2 -> w2, distance 2 versus u1 -> w1, distance 5) wins.
    Instance in(make_graph(8, {{0, 1, 1.0},
                               {0, 2, 1.0},
                               {1, 3, 5.0},
                               {2, 4, 2.0},
                               {3, 5, 10.0},
                               {4, 5, 10.0},
                               {3, 6, 1.0},
                               {4, 7, 1.0}}),
                make_heights({8, 3, 3, 9, 10, 1, 0.5, 0.6}));
    const PeakRecord* v = nullptr;
    for (const PeakRecord& r : in.records)
        if (r.peak == 0)
            v = &r;
    REQUIRE(v != nullptr);
    CHECK(v->key_height == 3.0);
    CHECK(v->key_cols == std::vector<NodeId>{1, 2});
    CHECK(v->dominators == std::vector<NodeId>{3, 4});

    PeakGraph pg = peak_graph(in.records);
    LineParentTree tree = line_parent_tree(pg, in.oracle, in.heights, in.landscape.max_node);
    std::size_t v_index = tree.index_of(0).value();
    CHECK(tree.parent[v_index] == 4); // w2, reached over the nearer pair
    CHECK(tree.via_col[v_index] == 2);

    auto expected = test::line_parents_by_enumeration(pg, in.oracle, in.heights);
    for (std::size_t i = 0; i < tree.peaks.size(); ++i) {
        NodeId peak = tree.peaks[i];
        if (peak == tree.root)
            continue;
        REQUIRE(expected.count(peak) == 1);
        CHECK(tree.parent[i] == expected[peak].first);
        CHECK(tree.via_col[i] == expected[peak].second);
    }
}

TEST_CASE("equal endpoint distances prefer the higher, then smaller-id peak") {
    // One col u(2) between v(5) and two higher peaks at equal distance.
    Instance higher(make_graph(4, {{0, 1, 1.0}, {1, 2, 2.0}, {1, 3, 2.0}}),
                    make_heights({5, 2, 9, 10}));
    PeakGraph pg1 = peak_graph(higher.records);
    LineParentTree t1 = line_parent_tree(pg1, higher.oracle, higher.heights, higher.landscape.max_node);
    CHECK(t1.parent[t1.index_of(0).value()] == 3); // the h=10 endpoint wins

    Instance tied(make_graph(4, {{0, 1, 1.0}, {1, 2, 2.0}, {1, 3, 2.0}}),
                  make_heights({5, 2, 9, 9}));
    PeakGraph pg2 = peak_graph(tied.records);
    LineParentTree t2 = line_parent_tree(pg2, tied.oracle, tied.heights, tied.landscape.max_node);
    CHECK(t2.parent[t2.index_of(0).value()] == 2); // equal heights: smaller id wins
}

TEST_CASE("line parents match the flat enumeration on random instances") {
    std::mt19937_64 gen(33);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 4 + uniform_below(gen, 27);
        Instance in(random_connected_graph(n, uniform_below(gen, n + 3), gen),
                    random_heights(n, gen));
        PeakGraph pg = peak_graph(in.records);
        LineParentTree tree = line_parent_tree(pg, in.oracle, in.heights, in.landscape.max_node);
        auto expected = test::line_parents_by_enumeration(pg, in.oracle, in.heights);
        for (std::size_t i = 0; i < tree.peaks.size(); ++i) {
            NodeId peak = tree.peaks[i];
            if (peak == tree.root) {
                CHECK(expected.count(peak) == 0);
                continue;
            }
            REQUIRE(expected.count(peak) == 1);
            CHECK(tree.parent[i] == expected[peak].first);
            CHECK(tree.via_col[i] == expected[peak].second);
        }
    }
}

TEST_CASE("line-parent trees satisfy the tree axioms on random instances") {
    SuiteResult suite = verify_tree_axioms(150, 34);
    INFO(suite.detail);
    CHECK(suite.passed);
    CHECK(suite.instances == 150);
}

TEST_CASE("tree statistics report width and depth") {
    // Hub-and-spokes: every lower peak hangs directly under the maximum.
    Instance star(make_graph(6, {{0, 1, 1.0},
                                 {0, 2, 1.0},
                                 {0, 3, 1.0},
                                 {0, 4, 1.0},
                                 {0, 5, 1.0}}),
                  make_heights({1, 100, 10, 11, 12, 13}));
    PeakGraph spg = peak_graph(star.records);
    LineParentTree stree = line_parent_tree(spg, star.oracle, star.heights, star.landscape.max_node);
    TreeStats sstats = tree_stats(stree);
    CHECK(sstats.nodes == 5);
    CHECK(sstats.width == 4);
    CHECK(sstats.depth == 1);

    // Alternating ridge: peaks chain one under another.
    Instance chain(make_graph(9, {{0, 1, 1.0},
                                  {1, 2, 1.0},
                                  {2, 3, 1.0},
                                  {3, 4, 1.0},
                                  {4, 5, 1.0},
                                  {5, 6, 1.0},
                                  {6, 7, 1.0},
                                  {7, 8, 1.0}}),
                   make_heights({50, 1, 40, 2, 30, 3, 20, 4, 10}));
    PeakGraph cpg = peak_graph(chain.records);
    LineParentTree ctree = line_parent_tree(cpg, chain.oracle, chain.heights, chain.landscape.max_node);
    TreeStats cstats = tree_stats(ctree);
    CHECK(cstats.nodes == 5);
    CHECK(cstats.width == 1);
    CHECK(cstats.depth == 4);
}

TEST_CASE("every line-parent pair appears as a peak-graph edge") {
    std::mt19937_64 gen(35);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 4 + uniform_below(gen, 40);
        Instance in(random_connected_graph(n, uniform_below(gen, n), gen),
                    random_heights(n, gen));
        PeakGraph pg = peak_graph(in.records);
        LineParentTree tree = line_parent_tree(pg, in.oracle, in.heights, in.landscape.max_node);
        for (std::size_t i = 0; i < tree.peaks.size(); ++i) {
            if (tree.peaks[i] == tree.root)
                continue;
            NodeId a = std::min(tree.peaks[i], tree.parent[i].value());
            NodeId b = std::max(tree.peaks[i], tree.parent[i].value());
            CHECK(std::binary_search(pg.edges.begin(), pg.edges.end(),
                                     std::pair<NodeId, NodeId>{a, b}));
        }
    }
}

TEST_CASE("DOT exports shape peaks as triangles and cols as circles") {
    Instance in = path_instance();
    MountainGraph mg = mountain_graph(in.records);
    MgDoc doc = make_mg_doc(mg, in.graph, in.heights, in.records);
    std::string dot = to_dot(doc);
    CHECK(dot.find("graph mountain {") != std::string::npos);
    CHECK(dot.find("shape=triangle") != std::string::npos);
    CHECK(dot.find("shape=circle") != std::string::npos);
    CHECK(dot.find("prom=2") != std::string::npos);

    PeakGraph pg = peak_graph(in.records);
    LineParentTree tree = line_parent_tree(pg, in.oracle, in.heights, in.landscape.max_node);
    LpDoc lp = make_lp_doc(tree, in.graph, in.heights, in.records);
    std::string tree_dot = to_dot(lp);
    CHECK(tree_dot.find("digraph lineparents {") != std::string::npos);
    CHECK(tree_dot.find("->") != std::string::npos);
}

TEST_CASE("JSON exports round-trip byte for byte") {
    Instance in = path_instance();
    MountainGraph mg = mountain_graph(in.records);
    MgDoc doc = make_mg_doc(mg, in.graph, in.heights, in.records);
    std::string json = to_json(doc);
    CHECK(json.find("\"oropeak.mg.v1\"") != std::string::npos);
    MgDoc parsed = mg_doc_from_json(json);
    CHECK(to_json(parsed) == json);

    PeakGraph pg = peak_graph(in.records);
    PgDoc pgd = make_pg_doc(pg, in.graph, in.heights, in.records);
    std::string pg_json = to_json(pgd);
    CHECK(to_json(pg_doc_from_json(pg_json)) == pg_json);

    LineParentTree tree = line_parent_tree(pg, in.oracle, in.heights, in.landscape.max_node);
    LpDoc lp = make_lp_doc(tree, in.graph, in.heights, in.records);
    std::string lp_json = to_json(lp);
    CHECK(to_json(lp_doc_from_json(lp_json)) == lp_json);
}
