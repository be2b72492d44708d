#include "oropeak/randomexp.hpp"

#include <ostream>
#include <random>

#include "oropeak/errors.hpp"
#include "oropeak/fmt.hpp"
#include "oropeak/parallel.hpp"
#include "oropeak/pipeline.hpp"
#include "oropeak/projection.hpp"
#include "oropeak/random.hpp"

namespace oropeak {

BipartiteGraph random_bipartite(std::size_t n_left, std::size_t n_right,
                                double density, std::uint64_t seed) {
    if (!(density > 0.0) || !(density < 1.0))
        throw input_error("bipartite density must lie strictly between 0 and 1");
    std::mt19937_64 gen(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId l = 0; l < n_left; ++l)
        for (NodeId r = 0; r < n_right; ++r)
            if (uniform01(gen) < density)
                edges.emplace_back(l, r);
    return BipartiteGraph(n_left, n_right, std::move(edges));
}

std::vector<double> default_density_grid(std::size_t m2) {
    std::vector<double> grid;
    if (m2 >= 1000) {
        // 0.0001 .. 0.01999 in steps of 0.0001 (the final step is short).
        for (int i = 1; i <= 199; ++i)
            grid.push_back(static_cast<double>(i) * 1e-4);
        grid.push_back(0.01999);
    } else {
        for (int i = 1; i <= 99; ++i)
            grid.push_back(static_cast<double>(i) * 0.01);
    }
    return grid;
}

std::optional<SweepSample> sweep_sample(std::size_t m1, std::size_t m2,
                                        double density, std::uint64_t seed) {
    auto bipartite = random_bipartite(m1, m2, density, seed);
    auto projection = project_bipartite_jaccard(bipartite, Side::Left);

    // Restrict to the nodes that actually co-occur; an edgeless projection
    // means this repetition produced no network at all.
    if (projection.graph.edge_count() == 0)
        return std::nullopt;
    auto component = largest_component(projection.graph);
    HeightMap heights;
    heights.values.reserve(component.to_original.size());
    for (NodeId old : component.to_original)
        heights.values.push_back(projection.heights.values[old]);

    auto run = run_pipeline(std::move(component.graph), std::move(heights));

    SweepSample s;
    s.n_g = run->graph.node_count();
    if (s.n_g >= 2) {
        s.density_g = oropeak::density(run->graph);
        s.density_rng = oropeak::density(run->rng->pruned);
    }
    s.n_mg = run->mg.nodes.size();
    if (s.n_mg >= 2)
        s.density_mg = oropeak::density(s.n_mg, run->mg.edges.size());
    s.n_lp = run->tree.peaks.size();
    return s;
}

namespace {

/// Mean over engaged values; disengaged when none are.
class MeanAccumulator {
public:
    void add(const std::optional<double>& v) {
        if (v) {
            sum_ += *v;
            ++count_;
        }
    }
    void add(double v) { add(std::optional<double>(v)); }
    std::optional<double> mean() const {
        if (count_ == 0)
            return std::nullopt;
        return sum_ / static_cast<double>(count_);
    }

private:
    double sum_ = 0.0;
    std::size_t count_ = 0;
};

} // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    if (cfg.repetitions == 0)
        throw input_error("sweep needs at least one repetition");
    std::vector<double> grid =
        cfg.densities.empty() ? default_density_grid(cfg.m2) : cfg.densities;
    for (double d : grid)
        if (!(d > 0.0) || !(d < 1.0))
            throw input_error("sweep densities must lie strictly between 0 and 1");

    // One slot per (density, repetition); slots are filled independently,
    // then reduced in index order, so the thread count cannot show.
    const std::size_t total = grid.size() * cfg.repetitions;
    std::vector<std::optional<SweepSample>> samples(total);
    parallel_for(total, cfg.threads, [&](std::size_t idx) {
        std::size_t di = idx / cfg.repetitions;
        std::size_t rep = idx % cfg.repetitions;
        samples[idx] = sweep_sample(cfg.m1, cfg.m2, grid[di],
                                    child_seed(cfg.seed, di, rep));
    });

    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (std::size_t di = 0; di < grid.size(); ++di) {
        SweepRow row;
        row.bipartite_density = grid[di];
        row.repetitions = cfg.repetitions;
        MeanAccumulator dg, drng, dmg, ng, nmg, nlp;
        for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
            const auto& sample = samples[di * cfg.repetitions + rep];
            if (!sample)
                continue;
            ++row.valid_repetitions;
            dg.add(sample->density_g);
            drng.add(sample->density_rng);
            dmg.add(sample->density_mg);
            ng.add(static_cast<double>(sample->n_g));
            nmg.add(static_cast<double>(sample->n_mg));
            nlp.add(static_cast<double>(sample->n_lp));
        }
        row.mean_density_g = dg.mean();
        row.mean_density_rng = drng.mean();
        row.mean_density_mg = dmg.mean();
        row.mean_n_g = ng.mean();
        row.mean_n_mg = nmg.mean();
        row.mean_n_lp = nlp.mean();
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    auto cell = [](const std::optional<double>& v) {
        return v ? fmt_double(*v) : std::string("null");
    };
    out << kSweepSchema << '\n' << kSweepHeader << '\n';
    for (const SweepRow& row : rows)
        out << fmt_double(row.bipartite_density) << ',' << row.repetitions << ','
            << row.valid_repetitions << ',' << cell(row.mean_density_g) << ','
            << cell(row.mean_density_rng) << ',' << cell(row.mean_density_mg) << ','
            << cell(row.mean_n_g) << ',' << cell(row.mean_n_mg) << ','
            << cell(row.mean_n_lp) << '\n';
}

} // namespace oropeak
