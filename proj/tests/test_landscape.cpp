#include <algorithm>
#include <vector>

#include "doctest.h"
#include "oropeak/distance.hpp"
#include "oropeak/errors.hpp"
#include "oropeak/landscape.hpp"
#include "oropeak/random.hpp"
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

    Instance(WeightedGraph g, HeightMap h)
        : graph(std::move(g)), oracle(graph), heights(std::move(h)),
          landscape(make_landscape(graph, oracle, heights)) {}
};

const PeakRecord& record_of(const std::vector<PeakRecord>& records, NodeId peak) {
    for (const PeakRecord& r : records)
        if (r.peak == peak)
            return r;
    REQUIRE(false);
    return records.front();
}

} // namespace

TEST_CASE("a three-node path yields the textbook records") {
    // a(3) - b(1) - c(5)
    Instance in(make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}), make_heights({3, 1, 5}));
    CHECK(peaks(in.landscape) == std::vector<NodeId>{0, 2});
    CHECK(in.landscape.max_node == 2);

    auto records = prominence_all(in.landscape);
    REQUIRE(records.size() == 2);
    const PeakRecord& a = record_of(records, 0);
    CHECK(a.key_height == 1.0);
    CHECK(a.prominence == 2.0);
    CHECK(a.key_cols == std::vector<NodeId>{1});
    CHECK(a.dominators == std::vector<NodeId>{2});
    REQUIRE(a.triples.size() == 1);
    CHECK(a.triples[0] == Triple{0, 1, 2});

    const PeakRecord& c = record_of(records, 2);
    CHECK(c.is_max);
    CHECK(c.prominence == 5.0);
    CHECK(c.key_cols.empty());
    CHECK(c.dominators.empty());
}

TEST_CASE("a monotone path has exactly one peak") {
    Instance in(make_graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}}),
                make_heights({1, 2, 3, 4}));
    CHECK(peaks(in.landscape) == std::vector<NodeId>{3});
    auto records = prominence_all(in.landscape);
    REQUIRE(records.size() == 1);
    CHECK(records[0].is_max);
    CHECK(records[0].prominence == 4.0);
}

TEST_CASE("a plateau still has the designated maximum as a peak") {
    Instance in(make_graph(2, {{0, 1, 1.0}}), make_heights({2, 2}));
    CHECK(in.landscape.max_node == 0); // tie toward the smaller id
    CHECK(peaks(in.landscape) == std::vector<NodeId>{0});
}

TEST_CASE("a single node is its own maximum peak") {
    Instance in(WeightedGraph(1, {}), make_heights({7.5}));
    CHECK(peaks(in.landscape) == std::vector<NodeId>{0});
    auto records = prominence_all(in.landscape);
    REQUIRE(records.size() == 1);
    CHECK(records[0].prominence == 7.5);
}

TEST_CASE("the star instance routes through the connecting leaf") {
    // Center s(10) with leaves 1..4; a taller peak q(12) hangs off the
    // highest leaf. The center's only way up passes that leaf.
    Instance in(make_graph(6, {{0, 1, 1.0},
                               {0, 2, 1.0},
                               {0, 3, 1.0},
                               {0, 4, 1.0},
                               {4, 5, 1.0}}),
                make_heights({10, 1, 2, 3, 4, 12}));
    auto records = prominence_all(in.landscape);
    const PeakRecord& s = record_of(records, 0);
    CHECK(s.key_height == 4.0);
    CHECK(s.prominence == 6.0);
    CHECK(s.key_cols == std::vector<NodeId>{4});
    CHECK(s.dominators == std::vector<NodeId>{5});
}

TEST_CASE("with two routes up, the higher col decides the prominence") {
    // v(10) reaches A(12) over a col at 7 and B(15) over a col at 4; the
    // better bottleneck (7) gives the smaller drop, prominence 3.
    Instance in(make_graph(7, {{0, 1, 1.0},
                               {1, 2, 1.0},
                               {0, 3, 1.0},
                               {3, 4, 1.0},
                               {2, 5, 1.0},
                               {4, 6, 1.0}}),
                make_heights({10, 7, 12, 4, 15, 1, 2}));
    auto records = prominence_all(in.landscape);
    const PeakRecord& v = record_of(records, 0);
    CHECK(v.key_height == 7.0);
    CHECK(v.prominence == 3.0);
    CHECK(v.key_cols == std::vector<NodeId>{1});
    CHECK(v.dominators == std::vector<NodeId>{2});
}

TEST_CASE("equal-height peaks resolve to a prominence-zero runner-up") {
    // a(5) - x(5) - c(5): ids make a the maximum; c stays a peak whose
    // best ascending path bottoms out at its own height.
    Instance in(make_graph(3, {{0, 2, 1.0}, {2, 1, 1.0}}), make_heights({5, 5, 5}));
    CHECK(in.landscape.max_node == 0);
    CHECK(peaks(in.landscape) == std::vector<NodeId>{0, 1});
    auto records = prominence_all(in.landscape);
    const PeakRecord& c = record_of(records, 1);
    CHECK(c.key_height == 5.0);
    CHECK(c.prominence == 0.0);
    CHECK(c.key_cols == std::vector<NodeId>{1}); // the peak itself
    CHECK(c.dominators == std::vector<NodeId>{0});
    REQUIRE(c.triples.size() == 1);
    CHECK(c.triples[0] == Triple{1, 1, 0});
}

TEST_CASE("record queries reject non-peaks and the maximum") {
    Instance in(make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}), make_heights({3, 1, 5}));
    CHECK_THROWS_AS(key_cols_and_dominators(in.landscape, 1), input_error);
    CHECK_THROWS_AS(key_cols_and_dominators(in.landscape, 2), input_error);
    CHECK_NOTHROW(key_cols_and_dominators(in.landscape, 0));
}

TEST_CASE("landscape construction validates its input") {
    auto g = make_graph(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    DistanceOracle d(g);
    HeightMap h = make_heights({1, 2, 3, 4});
    CHECK_THROWS_AS(make_landscape(g, d, h), input_error); // disconnected
    auto g2 = make_graph(2, {{0, 1, 1.0}});
    DistanceOracle d2(g2);
    HeightMap short_h = make_heights({1});
    CHECK_THROWS_AS(make_landscape(g2, d2, short_h), input_error);
}

TEST_CASE("non-max peak records satisfy the structural bounds") {
    std::mt19937_64 gen(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 3 + uniform_below(gen, 30);
        WeightedGraph g = random_connected_graph(n, uniform_below(gen, n), gen);
        HeightMap h = random_heights(n, gen);
        DistanceOracle d(g);
        Landscape L = make_landscape(g, d, h);
        for (const PeakRecord& r : prominence_all(L)) {
            if (r.is_max) {
                CHECK(r.prominence == h.values[r.peak]);
                continue;
            }
            CHECK(r.prominence > 0.0);
            CHECK(r.prominence <= h.values[r.peak]);
            CHECK(r.key_height < h.values[r.peak]);
            CHECK(r.prominence == h.values[r.peak] - r.key_height);
            CHECK_FALSE(r.key_cols.empty());
            CHECK_FALSE(r.dominators.empty());
            for (NodeId dom : r.dominators)
                CHECK(height_above(h, dom, r.peak));
            for (const Triple& t : r.triples) {
                CHECK(t.peak == r.peak);
                CHECK(std::binary_search(r.key_cols.begin(), r.key_cols.end(),
                                         t.col));
                CHECK(std::binary_search(r.dominators.begin(), r.dominators.end(),
                                         t.endpoint));
            }
        }
    }
}

TEST_CASE("scaling heights scales prominences and keeps the structure") {
    std::mt19937_64 gen(22);
    WeightedGraph g = random_connected_graph(9, 6, gen);
    HeightMap h = random_heights(9, gen);
    HeightMap scaled = h;
    const double c = 3.25;
    for (double& v : scaled.values)
        v *= c;

    DistanceOracle d(g);
    Landscape L1 = make_landscape(g, d, h);
    Landscape L2 = make_landscape(g, d, scaled);
    auto r1 = prominence_all(L1);
    auto r2 = prominence_all(L2);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].peak == r2[i].peak);
        CHECK(r1[i].key_cols == r2[i].key_cols);
        CHECK(r1[i].dominators == r2[i].dominators);
        CHECK(r1[i].triples == r2[i].triples);
        CHECK(r2[i].prominence == doctest::Approx(c * r1[i].prominence));
    }
}

TEST_CASE("the fast computation matches the path-enumeration oracle") {
    SuiteResult suite = verify_oracle_equivalence(120, 77);
    INFO(suite.detail);
    CHECK(suite.passed);
    CHECK(suite.instances == 120);
}

TEST_CASE("records are independent of the thread count") {
    std::mt19937_64 gen(23);
    WeightedGraph g = random_connected_graph(60, 50, gen);
    HeightMap h = random_heights(60, gen);
    DistanceOracle d(g);
    Landscape L = make_landscape(g, d, h);
    auto serial = prominence_all(L, 1);
    auto parallel = prominence_all(L, 8);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].peak == parallel[i].peak);
        CHECK(serial[i].key_height == parallel[i].key_height);
        CHECK(serial[i].prominence == parallel[i].prominence);
        CHECK(serial[i].key_cols == parallel[i].key_cols);
        CHECK(serial[i].dominators == parallel[i].dominators);
        CHECK(serial[i].triples == parallel[i].triples);
    }
}

TEST_CASE("the oracle rejects graphs beyond its size limit") {
    std::mt19937_64 gen(24);
    WeightedGraph g = random_connected_graph(kBruteForceNodeLimit + 1, 0, gen);
    HeightMap h = random_heights(kBruteForceNodeLimit + 1, gen);
    DistanceOracle d(g);
    Landscape L = make_landscape(g, d, h);
    CHECK_THROWS_AS(brute_force_records(L), input_error);
}
