#include <cmath>
#include <sstream>

#include "doctest.h"
#include "oropeak/errors.hpp"
#include "oropeak/randomexp.hpp"

using namespace oropeak;

TEST_CASE("bipartite generation validates the density") {
    CHECK_THROWS_AS(random_bipartite(5, 5, 0.0, 1), input_error);
    CHECK_THROWS_AS(random_bipartite(5, 5, 1.0, 1), input_error);
    CHECK_THROWS_AS(random_bipartite(5, 5, -0.1, 1), input_error);
    CHECK_NOTHROW(random_bipartite(5, 5, 0.5, 1));
}

TEST_CASE("bipartite edge counts follow the density") {
    const std::size_t l = 200, r = 300;
    const double density = 0.05;
    const double expected = density * l * r;
    const double sigma = std::sqrt(l * r * density * (1 - density));
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        total += static_cast<double>(random_bipartite(l, r, density, seed).edge_count());
    double mean = total / 20.0;
    CHECK(mean > expected - 3 * sigma / std::sqrt(20.0));
    CHECK(mean < expected + 3 * sigma / std::sqrt(20.0));
}

TEST_CASE("bipartite generation is reproducible per seed") {
    BipartiteGraph a = random_bipartite(30, 40, 0.1, 7);
    BipartiteGraph b = random_bipartite(30, 40, 0.1, 7);
    CHECK(a.edge_count() == b.edge_count());
    for (NodeId v = 0; v < 30; ++v)
        CHECK(a.left_neighbors(v) == b.left_neighbors(v));
    BipartiteGraph c = random_bipartite(30, 40, 0.1, 8);
    bool same = a.edge_count() == c.edge_count();
    for (NodeId v = 0; same && v < 30; ++v)
        same = a.left_neighbors(v) == c.left_neighbors(v);
    CHECK_FALSE(same);
}

TEST_CASE("the default grids match the documented endpoints") {
    auto fine = default_density_grid(1000);
    REQUIRE(fine.size() == 200);
    CHECK(fine.front() == 0.0001);
    CHECK(fine[1] == doctest::Approx(0.0002));
    CHECK(fine.back() == 0.01999);
    auto coarse = default_density_grid(999);
    REQUIRE(coarse.size() == 99);
    CHECK(coarse.front() == 0.01);
    CHECK(coarse.back() == doctest::Approx(0.99));
    for (std::size_t i = 1; i < fine.size(); ++i)
        CHECK(fine[i] > fine[i - 1]);
}

TEST_CASE("an edgeless projection yields no sample") {
    // Expected pairs at this density: 5 * 5 * 1e-4 -> overwhelmingly empty.
    bool saw_empty = false;
    for (std::uint64_t seed = 0; seed < 5 && !saw_empty; ++seed)
        saw_empty = !sweep_sample(5, 5, 1e-4, seed).has_value();
    CHECK(saw_empty);
}

TEST_CASE("samples respect the condensation chain") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto sample = sweep_sample(25, 60, 0.15, seed);
        if (!sample)
            continue;
        ++checked;
        CHECK(sample->n_g <= 25);
        CHECK(sample->n_mg <= sample->n_g);
        CHECK(sample->n_lp <= sample->n_mg);
        if (sample->density_g && sample->density_rng)
            CHECK(*sample->density_rng <= *sample->density_g + 1e-12);
        if (sample->density_g)
            CHECK(*sample->density_g <= 1.0);
    }
    CHECK(checked > 0);
}

TEST_CASE("the sweep validates its configuration") {
    SweepConfig zero_reps{10, 10, {0.5}, 0, 1, 1};
    CHECK_THROWS_AS(run_sweep(zero_reps), input_error);
    SweepConfig bad_density{10, 10, {1.5}, 2, 1, 1};
    CHECK_THROWS_AS(run_sweep(bad_density), input_error);
}

TEST_CASE("sweep rows aggregate only valid repetitions") {
    SweepConfig cfg{20, 50, {0.05, 0.3}, 5, 42, 1};
    auto rows = run_sweep(cfg);
    REQUIRE(rows.size() == 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].bipartite_density == cfg.densities[i]);
        CHECK(rows[i].repetitions == 5);
        CHECK(rows[i].valid_repetitions <= 5);
        if (rows[i].valid_repetitions > 0) {
            REQUIRE(rows[i].mean_n_g.has_value());
            CHECK(*rows[i].mean_n_g <= 20.0);
        }
    }
}

TEST_CASE("sweeps are reproducible and thread-independent") {
    SweepConfig cfg{15, 40, {0.1, 0.4}, 4, 7, 1};
    auto rows1 = run_sweep(cfg);
    cfg.threads = 8;
    auto rows8 = run_sweep(cfg);
    std::ostringstream s1, s8;
    write_sweep_csv(s1, rows1);
    write_sweep_csv(s8, rows8);
    CHECK(s1.str() == s8.str());
    auto rows1b = run_sweep(SweepConfig{15, 40, {0.1, 0.4}, 4, 7, 1});
    std::ostringstream s1b;
    write_sweep_csv(s1b, rows1b);
    CHECK(s1.str() == s1b.str());
}

TEST_CASE("the CSV carries the schema marker and null cells") {
    SweepConfig cfg{4, 4, {0.0001}, 3, 5, 1}; // almost surely no edges
    auto rows = run_sweep(cfg);
    std::ostringstream out;
    write_sweep_csv(out, rows);
    std::string text = out.str();
    CHECK(text.find("# schema: oropeak.sweep.v1\n") == 0);
    CHECK(text.find(kSweepHeader) != std::string::npos);
    if (rows[0].valid_repetitions == 0)
        CHECK(text.find("null") != std::string::npos);
}
