// tsa-bench: batch experiments, result comparison, tangent-flight scatter
// data and the function listing.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsa/errors.hpp"
#include "tsa/harness/compare.hpp"
#include "tsa/harness/experiment.hpp"
#include "tsa/harness/listing.hpp"
#include "tsa/harness/report.hpp"
#include "tsa/harness/scatter.hpp"
#include "tsa/stats.hpp"

namespace {

namespace fs = std::filesystem;
using namespace tsa::harness;

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct RunArgs {
    std::string config;
    std::optional<std::string> suite;
    std::optional<std::size_t> runs;
    std::optional<std::uint64_t> max_fe;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::size_t> jobs;
};

int cmd_run(const RunArgs& a)
{
    ExperimentConfig cfg = load_config(a.config);
    if (a.suite) {
        cfg.suite = parse_suite(*a.suite);
    }
    if (a.runs)
        cfg.runs = *a.runs;
    if (a.max_fe)
        cfg.max_fe = *a.max_fe;
    if (a.seed)
        cfg.base_seed = *a.seed;
    if (a.out)
        cfg.output_dir = *a.out;
    if (a.jobs)
        cfg.jobs = *a.jobs;
    cfg.validate();

    const auto functions = resolve_functions(cfg);
    std::fprintf(stderr, "running %zu function(s) x %zu run(s), suite %s\n", functions.size(), cfg.runs,
                 std::string(to_string(cfg.suite)).c_str());
    const auto results = run_experiment(cfg);
    write_outputs(results, cfg.output_dir);

    for (const auto& f : results.functions) {
        const auto row = report_row(f);
        std::printf("%-5s mean %.6e  std %.3e  best %.6e\n", row.function_id.c_str(), row.mean, row.std, row.best);
    }
    std::fprintf(stderr, "wrote %s\n", cfg.output_dir.string().c_str());
    return 0;
}

int cmd_compare(const std::vector<std::string>& files, double alpha, const std::optional<std::string>& out_file)
{
    std::vector<ExperimentResults> sets;
    std::set<std::string> labels;
    for (const auto& file : files) {
        auto r = load_results(file);
        // Same label twice (typically the same file): keep columns apart.
        std::string label = r.label;
        for (int k = 2; labels.contains(label); ++k)
            label = r.label + "#" + std::to_string(k);
        labels.insert(label);
        r.label = label;
        sets.push_back(std::move(r));
    }
    const auto report = compare_results(sets, alpha);
    if (out_file) {
        std::ofstream out(*out_file);
        if (!out)
            throw IoError("cannot write " + *out_file);
        write_comparison(out, report);
        if (!out)
            throw IoError("write failed: " + *out_file);
    }
    write_comparison(std::cout, report);
    return 0;
}

int cmd_scatter(const std::string& mode, const ScatterOptions& base, const std::string& out_file)
{
    ScatterOptions opt = base;
    opt.mode = parse_scatter_mode(mode);
    const auto values = scatter_samples(opt);
    std::ofstream out(out_file);
    if (!out)
        throw IoError("cannot write " + out_file);
    write_scatter_csv(out, values);
    if (!out)
        throw IoError("write failed: " + out_file);
    return 0;
}

int cmd_list(const std::optional<std::string>& suite, bool machine)
{
    std::vector<const tsa::testbed::TestFunction*> fns;
    if (suite && *suite != "all") {
        ExperimentConfig cfg;
        cfg.suite = parse_suite(*suite);
        if (cfg.suite == SuiteSelection::custom)
            throw tsa::ConfigError("list: suite must be classical30, fixed, hard or all");
        fns = resolve_functions(cfg);
    } else {
        fns = tsa::testbed::all_functions();
    }
    if (machine)
        std::cout << listing_json(fns);
    else
        print_listing(std::cout, fns);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tangent Search Algorithm benchmark harness"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "run TSA over a benchmark suite");
    run->add_option("--config", run_args.config, "experiment config (JSON)")->required();
    run->add_option("--suite", run_args.suite, "classical30 | fixed | hard | custom");
    run->add_option("--runs", run_args.runs, "independent runs per function");
    run->add_option("--max-fe", run_args.max_fe, "evaluation budget for every function");
    run->add_option("--seed", run_args.seed, "base seed; run k uses seed + k");
    run->add_option("--out", run_args.out, "output directory");
    run->add_option("--jobs", run_args.jobs, "worker threads (default: all cores)");

    std::vector<std::string> compare_files;
    double alpha = 0.05;
    std::optional<std::string> compare_out;
    auto* compare = app.add_subcommand("compare", "compare results.json files; the first is the reference");
    compare->add_option("results", compare_files, "results.json files")->required()->expected(2, -1);
    compare->add_option("--alpha", alpha, "significance level")->capture_default_str();
    compare->add_option("--out", compare_out, "also write the table to this file");

    std::string scatter_mode;
    std::string scatter_out;
    ScatterOptions scatter_opt;
    auto* scatter = app.add_subcommand("scatter", "tangent-flight samples for plotting");
    scatter->add_option("--mode", scatter_mode, "raw_tangent | decayed")->required();
    scatter->add_option("--samples", scatter_opt.samples, "number of samples")->capture_default_str();
    scatter->add_option("--seed", scatter_opt.seed, "random seed")->capture_default_str();
    scatter->add_option("--theta-max", scatter_opt.theta_max, "upper end of the angle range")->capture_default_str();
    scatter->add_option("--dim", scatter_opt.dimension, "D in the decay factor")->capture_default_str();
    scatter->add_option("--out", scatter_out, "output CSV")->required();

    std::optional<std::string> list_suite;
    bool machine = false;
    auto* list = app.add_subcommand("list", "list the benchmark functions");
    list->add_option("--suite", list_suite, "classical30 | fixed | hard | all");
    list->add_flag("--machine", machine, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (run->parsed())
            return cmd_run(run_args);
        if (compare->parsed())
            return cmd_compare(compare_files, alpha, compare_out);
        if (scatter->parsed())
            return cmd_scatter(scatter_mode, scatter_opt, scatter_out);
        if (list->parsed())
            return cmd_list(list_suite, machine);
    } catch (const tsa::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const FunctionSetMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const tsa::stats::StatsError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
