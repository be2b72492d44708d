#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "oropeak/graph.hpp"

namespace oropeak {

/// Bipartite Erdős–Rényi model: every (left, right) pair is an edge
/// independently with the given probability.
BipartiteGraph random_bipartite(std::size_t n_left, std::size_t n_right,
                                double density, std::uint64_t seed);

struct SweepConfig {
    std::size_t m1 = 100;
    std::size_t m2 = 100000;
    std::vector<double> densities; // empty = default grid for m2
    std::size_t repetitions = 20;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/// The default grids: a fine one ending at 0.01999 for large
/// second sets, a percent grid up to 0.99 otherwise.
std::vector<double> default_density_grid(std::size_t m2);

/// Metrics of one generate -> project -> prune -> condense run. Absent
/// metrics were undefined for that instance (e.g. densities of graphs
/// with fewer than two nodes). A repetition whose projection has no
/// edges at all yields a disengaged optional as a whole.
struct SweepSample {
    std::size_t n_g = 0;
    std::optional<double> density_g;
    std::optional<double> density_rng; // on G's node set
    std::size_t n_mg = 0;
    std::optional<double> density_mg;
    std::size_t n_lp = 0;
};

std::optional<SweepSample> sweep_sample(std::size_t m1, std::size_t m2,
                                        double density, std::uint64_t seed);

struct SweepRow {
    double bipartite_density = 0.0;
    std::size_t repetitions = 0;
    std::size_t valid_repetitions = 0;
    /// Means over repetitions where the metric was defined; absent when
    /// no repetition defined it.
    std::optional<double> mean_density_g;
    std::optional<double> mean_density_rng;
    std::optional<double> mean_density_mg;
    std::optional<double> mean_n_g;
    std::optional<double> mean_n_mg;
    std::optional<double> mean_n_lp;
};

/// One row per density, in input order. Repetition (density i, rep r)
/// uses the child seed derived from cfg.seed and (i, r); rows are
/// byte-reproducible for a fixed master seed and independent of the
/// thread count.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

inline constexpr const char* kSweepSchema = "# schema: oropeak.sweep.v1";
inline constexpr const char* kSweepHeader =
    "bipartite_density,reps,valid_reps,mean_density_g,mean_density_rng,"
    "mean_density_mg,mean_n_g,mean_n_mg,mean_n_lp";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

} // namespace oropeak
