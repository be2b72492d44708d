#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oropeak/errors.hpp"
#include "oropeak/evaluation.hpp"
#include "oropeak/fmt.hpp"
#include "oropeak/io.hpp"
#include "oropeak/parallel.hpp"
#include "oropeak/pipeline.hpp"
#include "oropeak/projection.hpp"
#include "oropeak/randomexp.hpp"
#include "oropeak/serialize.hpp"
#include "oropeak/verify.hpp"

namespace {

using namespace oropeak;
using ordered_json = nlohmann::ordered_json;

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw input_error("cannot write '" + path + "'");
    out << content;
    out.flush();
    if (!out)
        throw input_error("write to '" + path + "' failed");
}

/// Options shared by every subcommand that runs the condensation pipeline.
struct InputArgs {
    std::string edges_path;
    std::string heights_path;
    std::string bipartite_path;
    std::string project_side = "left";
    bool header = false;
    bool no_rng = false;
    bool all_components = false;
    unsigned threads = 0;
};

void add_input_options(CLI::App* sub, InputArgs& args, bool pipeline_flags = true) {
    auto* edges = sub->add_option("--edges", args.edges_path,
                                  "edge list file (u v [weight] per line)");
    auto* heights =
        sub->add_option("--heights", args.heights_path, "height file (node height)");
    auto* bip = sub->add_option("--bipartite", args.bipartite_path,
                                "bipartite pair file; projected with Jaccard "
                                "weights, heights = degrees");
    sub->add_option("--project-side", args.project_side,
                    "side of the bipartite graph to project onto")
        ->check(CLI::IsMember({"left", "right"}));
    sub->add_flag("--header", args.header, "skip the first line of input files");
    bip->excludes(edges)->excludes(heights);
    edges->needs(heights);
    heights->needs(edges);
    if (pipeline_flags) {
        sub->add_flag("--no-rng", args.no_rng,
                      "traverse the raw graph instead of the pruned one");
        sub->add_flag("--all-components", args.all_components,
                      "run every component instead of only the largest");
    }
    sub->add_option("--threads", args.threads,
                    "worker threads (0 = OROPEAK_THREADS or hardware)");
}

struct LoadedInput {
    WeightedGraph graph;
    HeightMap heights;
};

LoadedInput load_input(const InputArgs& args) {
    if (!args.bipartite_path.empty()) {
        BipartiteGraph b = load_bipartite_file(args.bipartite_path, args.header);
        auto side = args.project_side == "left" ? Side::Left : Side::Right;
        ProjectionResult projection = project_bipartite_jaccard(b, side);
        if (projection.clamped_pairs > 0)
            std::cerr << "warning: " << projection.clamped_pairs
                      << " identical-neighborhood pairs clamped to epsilon weight\n";
        return {std::move(projection.graph), std::move(projection.heights)};
    }
    if (args.edges_path.empty())
        throw input_error("provide --edges with --heights, or --bipartite");
    WeightedGraph g = load_edge_list_file(args.edges_path, args.header);
    HeightMap h;
    if (args.heights_path.empty()) // only rng gets here; it ignores heights
        h.values.assign(g.node_count(), 0.0);
    else
        h = load_heights_file(args.heights_path, g, args.header);
    return {std::move(g), std::move(h)};
}

struct ComponentRun {
    WeightedGraph graph;
    HeightMap heights;
    std::size_t index = 0;
};

std::vector<ComponentRun> select_components(LoadedInput in, const InputArgs& args) {
    std::vector<ComponentRun> runs;
    if (in.graph.connected()) {
        runs.push_back({std::move(in.graph), std::move(in.heights), 0});
        return runs;
    }
    auto restrict_heights = [&](const std::vector<NodeId>& to_original) {
        HeightMap h;
        h.values.reserve(to_original.size());
        for (NodeId old : to_original)
            h.values.push_back(in.heights.values[old]);
        return h;
    };
    if (args.all_components) {
        auto comps = all_components(in.graph);
        for (std::size_t i = 0; i < comps.size(); ++i)
            runs.push_back(
                {std::move(comps[i].graph), restrict_heights(comps[i].to_original), i});
        return runs;
    }
    auto comp = largest_component(in.graph);
    std::cerr << "warning: input has " << comp.component_count
              << " components; using the largest (" << comp.graph.node_count()
              << " of " << in.graph.node_count() << " nodes)\n";
    runs.push_back({std::move(comp.graph), restrict_heights(comp.to_original), 0});
    return runs;
}

PipelineOptions pipeline_options(const InputArgs& args) {
    PipelineOptions opts;
    opts.use_rng = !args.no_rng;
    opts.threads = resolve_thread_count(args.threads);
    return opts;
}

std::optional<double> mean_of(const std::vector<std::optional<double>>& values) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& v : values)
        if (v) {
            sum += *v;
            ++count;
        }
    if (count == 0)
        return std::nullopt;
    return sum / static_cast<double>(count);
}

ordered_json json_or_null(const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

int run_verify_command(std::size_t instances, std::uint64_t seed,
                       const InputArgs& args) {
    std::vector<SuiteResult> results;
    if (!args.edges_path.empty() || !args.bipartite_path.empty()) {
        LoadedInput in = load_input(args);
        auto runs = select_components(std::move(in), args);
        for (const auto& run : runs)
            results.push_back(
                verify_tree_axioms_instance(run.graph, run.heights, !args.no_rng));
    } else {
        results = verify_all(instances, seed);
    }
    bool all_passed = true;
    std::ostringstream out;
    for (const SuiteResult& r : results) {
        if (r.passed)
            out << "PASS " << r.name << " (" << r.instances << " instances)\n";
        else
            out << "FAIL " << r.name << ": " << r.detail << "\n";
        all_passed = all_passed && r.passed;
    }
    std::cout << out.str();
    if (!all_passed)
        throw internal_error("verification suite failed");
    return 0;
}

std::string prominence_tsv(const PipelineResult& run, bool with_component,
                           std::size_t component) {
    std::ostringstream out;
    for (const PeakRecord& rec : run.records) {
        if (with_component)
            out << component << '\t';
        out << run.graph.label(rec.peak) << '\t' << fmt_double(run.heights.values[rec.peak])
            << '\t' << fmt_double(rec.prominence) << '\t'
            << (rec.is_max ? std::string() : fmt_double(rec.key_height)) << '\t'
            << rec.key_cols.size() << '\t' << rec.dominators.size() << '\n';
    }
    return out.str();
}

ordered_json rng_report_json(const WeightedGraph& g, const RngResult& r) {
    RngReport report = rng_report(g, r);
    ordered_json j;
    j["schema"] = "oropeak.rng.v1";
    j["nodes"] = report.nodes;
    j["edges_before"] = report.edges_before;
    j["edges_after"] = report.edges_after;
    j["removed"] = report.edges_before - report.edges_after;
    j["density_before"] = json_or_null(report.density_before);
    j["density_after"] = json_or_null(report.density_after);
    j["witness_histogram"] = ordered_json::array();
    for (const auto& [witness, count] : report.witness_histogram) {
        ordered_json entry;
        entry["witness"] = g.label(witness);
        entry["count"] = count;
        j["witness_histogram"].push_back(std::move(entry));
    }
    return j;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"condenses weighted networks into orometric hierarchies: "
                 "pruned backbones, peaks with prominence, mountain graphs "
                 "and line-parent trees"};
    app.require_subcommand(1);

    // ---- rng ----------------------------------------------------------
    auto* rng_cmd = app.add_subcommand(
        "rng", "prune edges via the relative neighborhood graph");
    InputArgs rng_args;
    std::string rng_out, rng_report_path;
    add_input_options(rng_cmd, rng_args, /*pipeline_flags=*/false);
    rng_cmd->get_option("--edges")->remove_needs(rng_cmd->get_option("--heights"));
    rng_cmd->add_option("--out", rng_out, "pruned edge list destination (- = stdout)");
    rng_cmd->add_option("--report", rng_report_path, "JSON summary destination");
    rng_cmd->callback([&] {
        LoadedInput in = load_input(rng_args);
        auto runs = select_components(std::move(in), rng_args);
        const auto& run = runs.front();
        DistanceOracle oracle(run.graph);
        RngResult result = relative_neighborhood_graph(
            run.graph, oracle, resolve_thread_count(rng_args.threads));
        std::ostringstream edges;
        write_edge_list(edges, result.pruned);
        write_text(rng_out, edges.str());
        if (!rng_report_path.empty())
            write_text(rng_report_path, rng_report_json(run.graph, result).dump(2) + "\n");
    });

    // ---- prominence ---------------------------------------------------
    auto* prom_cmd = app.add_subcommand(
        "prominence", "peaks with prominence, key cols and dominators");
    InputArgs prom_args;
    std::string prom_out;
    add_input_options(prom_cmd, prom_args);
    prom_cmd->add_option("--out", prom_out, "TSV destination (- = stdout)");
    prom_cmd->callback([&] {
        LoadedInput in = load_input(prom_args);
        auto runs = select_components(std::move(in), prom_args);
        std::ostringstream out;
        out << (prom_args.all_components
                    ? "# component\tpeak\theight\tprominence\tkey_height\tkey_cols\tdominators\n"
                    : "# peak\theight\tprominence\tkey_height\tkey_cols\tdominators\n");
        for (auto& run : runs) {
            auto result = run_pipeline(std::move(run.graph), std::move(run.heights),
                                       pipeline_options(prom_args));
            out << prominence_tsv(*result, prom_args.all_components, run.index);
        }
        write_text(prom_out, out.str());
    });

    // ---- mg / tree ------------------------------------------------------
    struct GraphCmdArgs {
        InputArgs input;
        std::string out_dot, out_json;
    };
    auto add_graph_cmd = [&](const std::string& name, const std::string& desc,
                             GraphCmdArgs& args, auto emit) {
        auto* cmd = app.add_subcommand(name, desc);
        add_input_options(cmd, args.input);
        cmd->add_option("--out-dot", args.out_dot, "Graphviz destination");
        cmd->add_option("--out-json", args.out_json, "JSON destination");
        cmd->callback([&args, emit] {
            if (args.input.all_components)
                throw input_error("--all-components is not supported here; run per "
                                  "component or use prominence/stats");
            LoadedInput in = load_input(args.input);
            auto runs = select_components(std::move(in), args.input);
            auto& run = runs.front();
            auto result = run_pipeline(std::move(run.graph), std::move(run.heights),
                                       pipeline_options(args.input));
            auto [dot, json] = emit(*result);
            if (!args.out_dot.empty())
                write_text(args.out_dot, dot);
            if (!args.out_json.empty())
                write_text(args.out_json, json);
            if (args.out_dot.empty() && args.out_json.empty())
                std::cout << json;
        });
        return cmd;
    };

    GraphCmdArgs mg_args;
    add_graph_cmd("mg", "mountain graph of peaks and key cols", mg_args,
                  [](const PipelineResult& r) {
                      MgDoc doc = make_mg_doc(r.mg, r.graph, r.heights, r.records);
                      return std::pair(to_dot(doc), to_json(doc));
                  });

    GraphCmdArgs tree_args;
    add_graph_cmd("tree", "line-parent hierarchy of peaks", tree_args,
                  [](const PipelineResult& r) {
                      LpDoc doc = make_lp_doc(r.tree, r.graph, r.heights, r.records);
                      return std::pair(to_dot(doc), to_json(doc));
                  });

    // ---- stats ----------------------------------------------------------
    auto* stats_cmd = app.add_subcommand(
        "stats", "one CSV row of pipeline sizes and densities");
    InputArgs stats_args;
    std::string stats_out, stats_name = "graph";
    add_input_options(stats_cmd, stats_args);
    stats_cmd->add_option("--name", stats_name, "value of the name column");
    stats_cmd->add_option("--out", stats_out, "CSV destination (- = stdout)");
    stats_cmd->callback([&] {
        LoadedInput in = load_input(stats_args);
        auto runs = select_components(std::move(in), stats_args);
        std::ostringstream out;
        out << (stats_args.all_components ? std::string("component,") + kStatsHeader
                                          : std::string(kStatsHeader))
            << '\n';
        for (auto& run : runs) {
            auto result = run_pipeline(std::move(run.graph), std::move(run.heights),
                                       pipeline_options(stats_args));
            if (stats_args.all_components)
                out << run.index << ',';
            out << stats_row_csv(pipeline_stats(stats_name, *result)) << '\n';
        }
        write_text(stats_out, out.str());
    });

    // ---- mspd -----------------------------------------------------------
    auto* mspd_cmd = app.add_subcommand(
        "mspd", "distance from every non-target node to a target set");
    InputArgs mspd_args;
    std::string mspd_targets, mspd_out;
    add_input_options(mspd_cmd, mspd_args);
    mspd_cmd->add_option("--targets", mspd_targets, "peaks | topn (equal-size highest)")
        ->required()
        ->check(CLI::IsMember({"peaks", "topn"}));
    mspd_cmd->add_option("--out", mspd_out, "CSV destination (- = stdout)");
    mspd_cmd->callback([&] {
        if (mspd_args.all_components)
            throw input_error("--all-components is not supported here");
        LoadedInput in = load_input(mspd_args);
        auto runs = select_components(std::move(in), mspd_args);
        auto& run = runs.front();
        auto result = run_pipeline(std::move(run.graph), std::move(run.heights),
                                   pipeline_options(mspd_args));
        std::vector<NodeId> targets = result->peak_ids();
        if (mspd_targets == "topn")
            targets = top_n_highest(result->heights, targets.size());
        auto summary = mspd(result->graph, targets);
        std::ostringstream out;
        out << "targets,count,mean,median,max\n" << mspd_targets << ',';
        if (summary)
            out << summary->count << ',' << fmt_double(summary->mean) << ','
                << fmt_double(summary->median) << ',' << fmt_double(summary->max);
        else
            out << "0,null,null,null";
        out << '\n';
        write_text(mspd_out, out.str());
    });

    // ---- baseline ---------------------------------------------------------
    auto* base_cmd = app.add_subcommand(
        "baseline", "size-matched random samples for comparison");
    InputArgs base_args;
    std::string base_method, base_out;
    std::size_t base_reps = 10;
    std::uint64_t base_seed = 0;
    std::optional<std::size_t> base_size;
    bool pagerank_unweighted = false;
    add_input_options(base_cmd, base_args);
    base_cmd->add_option("--method", base_method,
                         "es = edges from the input, sized like the pruned "
                         "graph; rpn = PageRank nodes from the pruned graph, "
                         "sized like the mountain graph")
        ->required()
        ->check(CLI::IsMember({"es", "rpn"}));
    base_cmd->add_option("--reps", base_reps, "repetitions");
    base_cmd->add_option("--seed", base_seed, "base seed; run i uses seed+i");
    base_cmd
        ->add_option("--size", base_size,
                     "override the sample size (edges for es, nodes for rpn)")
        ->expected(1);
    base_cmd->add_flag("--pagerank-unweighted", pagerank_unweighted,
                       "ignore weights in the PageRank transition");
    base_cmd->callback([&] {
        if (base_args.all_components)
            throw input_error("--all-components is not supported here");
        if (base_reps == 0)
            throw input_error("baseline needs at least one repetition");
        LoadedInput in = load_input(base_args);
        auto runs = select_components(std::move(in), base_args);
        auto& run = runs.front();
        auto result = run_pipeline(std::move(run.graph), std::move(run.heights),
                                   pipeline_options(base_args));

        ordered_json j;
        j["schema"] = "oropeak.baseline.v1";
        j["method"] = base_method;
        j["reps"] = base_reps;
        j["seed"] = base_seed;
        std::size_t size = 0;
        if (base_method == "es")
            size = base_size.value_or(result->rng ? result->rng->pruned.edge_count()
                                                  : result->graph.edge_count());
        else
            size = base_size.value_or(result->mg.nodes.size());
        j["sample_size"] = size;
        j["source"] = base_method == "es" ? "input-graph" : "pruned-graph";

        std::vector<std::optional<double>> densities;
        std::vector<double> node_counts, edge_counts;
        j["runs"] = ordered_json::array();
        for (std::size_t i = 0; i < base_reps; ++i) {
            std::uint64_t seed = base_seed + i;
            SampledGraph sample =
                base_method == "es"
                    ? edge_sampling_baseline(result->graph, size, seed)
                    : pagerank_node_sampling(result->rng ? result->rng->pruned
                                                         : result->graph,
                                             size, seed, !pagerank_unweighted);
            ordered_json entry;
            entry["seed"] = seed;
            entry["nodes"] = sample.graph.node_count();
            entry["edges"] = sample.graph.edge_count();
            std::optional<double> dens;
            if (sample.graph.node_count() >= 2)
                dens = density(sample.graph);
            entry["density"] = json_or_null(dens);
            j["runs"].push_back(std::move(entry));
            node_counts.push_back(static_cast<double>(sample.graph.node_count()));
            edge_counts.push_back(static_cast<double>(sample.graph.edge_count()));
            densities.push_back(dens);
        }
        double n_sum = 0.0, e_sum = 0.0;
        for (double v : node_counts)
            n_sum += v;
        for (double v : edge_counts)
            e_sum += v;
        j["mean_nodes"] = n_sum / static_cast<double>(base_reps);
        j["mean_edges"] = e_sum / static_cast<double>(base_reps);
        j["mean_density"] = json_or_null(mean_of(densities));
        write_text(base_out, j.dump(2) + "\n");
    });
    base_cmd->add_option("--out", base_out, "JSON destination (- = stdout)");

    // ---- sweep ------------------------------------------------------------
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "random bipartite density sweep (generate, project, condense)");
    SweepConfig sweep_cfg;
    std::string sweep_out;
    std::vector<double> sweep_densities;
    unsigned sweep_threads = 0;
    sweep_cmd->add_option("--m1", sweep_cfg.m1, "projected side size");
    sweep_cmd->add_option("--m2", sweep_cfg.m2, "anchor side size");
    sweep_cmd->add_option("--reps", sweep_cfg.repetitions, "repetitions per density");
    sweep_cmd->add_option("--seed", sweep_cfg.seed, "master seed");
    sweep_cmd
        ->add_option("--densities", sweep_densities,
                     "bipartite densities (default: grid matching --m2)")
        ->delimiter(',');
    sweep_cmd->add_option("--threads", sweep_threads,
                          "worker threads (0 = OROPEAK_THREADS or hardware)");
    sweep_cmd->add_option("--out", sweep_out, "CSV destination (- = stdout)");
    sweep_cmd->callback([&] {
        sweep_cfg.densities = sweep_densities;
        sweep_cfg.threads = resolve_thread_count(sweep_threads);
        auto rows = run_sweep(sweep_cfg);
        std::ostringstream out;
        write_sweep_csv(out, rows);
        write_text(sweep_out, out.str());
    });

    // ---- verify -------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand(
        "verify", "run the structural guarantee suites on random or given inputs");
    InputArgs verify_args;
    std::size_t verify_instances = 50;
    std::uint64_t verify_seed = 0;
    add_input_options(verify_cmd, verify_args);
    verify_cmd->add_option("--random", verify_instances, "random instances per suite");
    verify_cmd->add_option("--seed", verify_seed, "master seed");
    verify_cmd->callback(
        [&] { run_verify_command(verify_instances, verify_seed, verify_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::cout << app.help();
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
