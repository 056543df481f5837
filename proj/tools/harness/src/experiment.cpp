#include "tsa/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tsa/errors.hpp"

namespace tsa::harness {

namespace {

using nlohmann::json;

constexpr std::uint64_t kNoiseSalt = 0x6e6f697365;  // "noise"

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> known, std::string_view where)
{
    for (const auto& [key, value] : obj.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
}

template <class T>
void read(const json& obj, const char* key, T& dst)
{
    if (auto it = obj.find(key); it != obj.end())
        dst = it->template get<T>();
}

ScheduleClock parse_clock(const std::string& s)
{
    if (s == "evaluations")
        return ScheduleClock::evaluations;
    if (s == "iterations")
        return ScheduleClock::iterations;
    throw ConfigError("tsa.clock must be \"evaluations\" or \"iterations\", got \"" + s + "\"");
}

Acceptance parse_acceptance(const std::string& s, const char* key)
{
    if (s == "greedy")
        return Acceptance::greedy;
    if (s == "always")
        return Acceptance::always;
    throw ConfigError(std::string("tsa.") + key + " must be \"greedy\" or \"always\", got \"" + s + "\"");
}

TsaConfig parse_tsa(const json& j)
{
    if (!j.is_object())
        throw ConfigError("tsa must be an object");
    reject_unknown_keys(j,
                        {"pop_size", "p_switch", "p_esc", "p_restart", "theta_max_intens", "theta_max_explore",
                         "theta_max_escape", "replace_fraction_large", "replace_fraction_small",
                         "small_dim_threshold", "clock", "move_acceptance", "escape_acceptance", "immediate_elite",
                         "per_dimension_theta", "per_dimension_escape_rand"},
                        "tsa");
    TsaConfig c;
    read(j, "pop_size", c.pop_size);
    read(j, "p_switch", c.p_switch);
    read(j, "p_esc", c.p_esc);
    read(j, "p_restart", c.p_restart);
    read(j, "theta_max_intens", c.theta_max_intens);
    read(j, "theta_max_explore", c.theta_max_explore);
    read(j, "theta_max_escape", c.theta_max_escape);
    read(j, "replace_fraction_large", c.replace_fraction_large);
    read(j, "replace_fraction_small", c.replace_fraction_small);
    read(j, "small_dim_threshold", c.small_dim_threshold);
    read(j, "immediate_elite", c.immediate_elite);
    read(j, "per_dimension_theta", c.per_dimension_theta);
    read(j, "per_dimension_escape_rand", c.per_dimension_escape_rand);
    if (j.contains("clock"))
        c.clock = parse_clock(j["clock"].get<std::string>());
    if (j.contains("move_acceptance"))
        c.move_acceptance = parse_acceptance(j["move_acceptance"].get<std::string>(), "move_acceptance");
    if (j.contains("escape_acceptance"))
        c.escape_acceptance = parse_acceptance(j["escape_acceptance"].get<std::string>(), "escape_acceptance");
    return c;
}

}  // namespace

std::string_view to_string(SuiteSelection s)
{
    switch (s) {
    case SuiteSelection::classical30: return "classical30";
    case SuiteSelection::fixed: return "fixed";
    case SuiteSelection::hard: return "hard";
    case SuiteSelection::custom: return "custom";
    }
    return "?";
}

SuiteSelection parse_suite(std::string_view name)
{
    for (auto s : {SuiteSelection::classical30, SuiteSelection::fixed, SuiteSelection::hard, SuiteSelection::custom})
        if (to_string(s) == name)
            return s;
    throw ConfigError("unknown suite '" + std::string(name) + "' (expected classical30, fixed, hard or custom)");
}

void ExperimentConfig::validate() const
{
    if (runs == 0)
        throw ConfigError("runs must be >= 1");
    if (trace_stride == 0)
        throw ConfigError("trace_stride must be >= 1");
    if (suite == SuiteSelection::custom && function_ids.empty())
        throw ConfigError("suite \"custom\" needs function_ids");
    if (max_fe && *max_fe == 0)
        throw ConfigError("max_fe must be positive");
    TsaConfig probe = tsa;
    probe.max_fe = std::max<std::uint64_t>(probe.pop_size, 1);
    probe.validate();
    for (const auto* f : resolve_functions(*this)) {
        const auto fe = budget_for(*this, *f);
        if (fe < tsa.pop_size)
            throw ConfigError(f->id + ": max_fe " + std::to_string(fe) + " is below pop_size "
                              + std::to_string(tsa.pop_size));
    }
}

ExperimentConfig parse_config(std::string_view json_text)
{
    ExperimentConfig c;
    try {
        const json j = json::parse(json_text);
        if (!j.is_object())
            throw ConfigError("config must be a JSON object");
        reject_unknown_keys(j,
                            {"label", "suite", "function_ids", "runs", "max_fe", "max_fe_overrides", "tsa",
                             "base_seed", "output_dir", "trace_stride", "jobs"},
                            "config");
        read(j, "label", c.label);
        if (j.contains("suite"))
            c.suite = parse_suite(j["suite"].get<std::string>());
        read(j, "function_ids", c.function_ids);
        read(j, "runs", c.runs);
        if (j.contains("max_fe") && !j["max_fe"].is_null())
            c.max_fe = j["max_fe"].get<std::uint64_t>();
        read(j, "max_fe_overrides", c.max_fe_overrides);
        if (j.contains("tsa"))
            c.tsa = parse_tsa(j["tsa"]);
        read(j, "base_seed", c.base_seed);
        if (j.contains("output_dir"))
            c.output_dir = j["output_dir"].get<std::string>();
        read(j, "trace_stride", c.trace_stride);
        read(j, "jobs", c.jobs);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw IoError("cannot open config file " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::vector<const testbed::TestFunction*> resolve_functions(const ExperimentConfig& config)
{
    std::vector<std::string> unknown;
    for (const auto& id : config.function_ids)
        if (!testbed::find_function(id))
            unknown.push_back(id);
    for (const auto& [id, fe] : config.max_fe_overrides)
        if (!testbed::find_function(id))
            unknown.push_back(id);
    if (!unknown.empty()) {
        std::string msg = "unknown function id(s):";
        for (const auto& id : unknown)
            msg += " " + id;
        throw ConfigError(msg);
    }

    const std::set<std::string> wanted(config.function_ids.begin(), config.function_ids.end());
    std::vector<const testbed::TestFunction*> out;
    for (const auto* f : testbed::all_functions()) {
        const bool in_suite = config.suite == SuiteSelection::custom
                              || (config.suite == SuiteSelection::classical30 && f->suite == testbed::Suite::classical30)
                              || (config.suite == SuiteSelection::fixed && f->suite == testbed::Suite::fixed)
                              || (config.suite == SuiteSelection::hard && f->suite == testbed::Suite::hard);
        if (in_suite && (wanted.empty() || wanted.contains(f->id)))
            out.push_back(f);
    }
    if (out.empty())
        throw ConfigError("no function selected (suite " + std::string(to_string(config.suite))
                          + " does not contain the listed ids)");
    return out;
}

std::uint64_t default_max_fe(const testbed::TestFunction& f)
{
    return f.suite == testbed::Suite::fixed ? 10'000 : 50'000;
}

std::uint64_t budget_for(const ExperimentConfig& config, const testbed::TestFunction& f)
{
    if (auto it = config.max_fe_overrides.find(f.id); it != config.max_fe_overrides.end())
        return it->second;
    return config.max_fe.value_or(default_max_fe(f));
}

const FunctionResults* ExperimentResults::find(std::string_view id) const
{
    for (const auto& f : functions)
        if (f.function_id == id)
            return &f;
    return nullptr;
}

RunRecord run_single(const ExperimentConfig& config, const testbed::TestFunction& f, std::size_t run_index,
                     bool keep_trace)
{
    TsaConfig tsa = config.tsa;
    tsa.max_fe = budget_for(config, f);
    const std::uint64_t seed = run_seed(config.base_seed, run_index);
    const Problem problem = testbed::make_problem(f, std::nullopt, derive_seed(seed, kNoiseSalt));

    TraceOptions trace;
    trace.stride = config.trace_stride;
    RunResult r = tsa::run(problem, tsa, seed, trace);

    RunRecord rec;
    rec.run = run_index;
    rec.seed = seed;
    rec.summary = std::move(r.summary);
    if (keep_trace)
        rec.trace = std::move(r.trace);
    return rec;
}

ExperimentResults run_experiment(const ExperimentConfig& config, bool keep_traces)
{
    config.validate();
    const auto functions = resolve_functions(config);

    ExperimentResults out;
    out.label = config.label;
    out.base_seed = config.base_seed;
    out.functions.resize(functions.size());
    for (std::size_t i = 0; i < functions.size(); ++i) {
        auto& fr = out.functions[i];
        fr.function_id = functions[i]->id;
        fr.name = functions[i]->name;
        fr.dimension = functions[i]->default_dimension;
        fr.max_fe = budget_for(config, *functions[i]);
        fr.runs.resize(config.runs);
    }

    const std::size_t tasks = functions.size() * config.runs;
    std::size_t workers = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, tasks);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t k = next++; k < tasks; k = next++) {
            const std::size_t fi = k / config.runs;
            const std::size_t run = k % config.runs;
            try {
                out.functions[fi].runs[run] = run_single(config, *functions[fi], run, keep_traces);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = tasks;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

}  // namespace tsa::harness
