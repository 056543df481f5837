#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsa/engine.hpp"
#include "tsa/testbed.hpp"

namespace tsa::harness {

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SuiteSelection { classical30, fixed, hard, custom };

std::string_view to_string(SuiteSelection s);
SuiteSelection parse_suite(std::string_view name);  // throws ConfigError

struct ExperimentConfig {
    std::string label = "TSA";
    SuiteSelection suite = SuiteSelection::classical30;
    std::vector<std::string> function_ids;  ///< required for custom; a filter otherwise
    std::size_t runs = 30;
    std::optional<std::uint64_t> max_fe;    ///< unset: 10,000 for fixed-dimension, 50,000 otherwise
    std::map<std::string, std::uint64_t> max_fe_overrides;
    TsaConfig tsa;
    std::uint64_t base_seed = 0;
    std::filesystem::path output_dir = "results";
    std::uint64_t trace_stride = 10;
    std::size_t jobs = 0;  ///< 0: one worker per hardware thread

    void validate() const;
};

/// Parses the JSON form of ExperimentConfig. Unknown keys are rejected.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& file);

/// Functions selected by the config, in corpus order. Throws ConfigError
/// naming every unknown id.
std::vector<const testbed::TestFunction*> resolve_functions(const ExperimentConfig& config);

std::uint64_t default_max_fe(const testbed::TestFunction& f);
std::uint64_t budget_for(const ExperimentConfig& config, const testbed::TestFunction& f);

inline std::uint64_t run_seed(std::uint64_t base_seed, std::size_t run_index)
{
    return base_seed + run_index;
}

struct RunRecord {
    std::size_t run = 0;
    std::uint64_t seed = 0;
    RunSummary summary;
    ConvergenceTrace trace;
};

struct FunctionResults {
    std::string function_id;
    std::string name;
    std::size_t dimension = 0;
    std::uint64_t max_fe = 0;
    std::vector<RunRecord> runs;  ///< ordered by run index
};

struct ExperimentResults {
    std::string label;
    std::uint64_t base_seed = 0;
    std::vector<FunctionResults> functions;

    const FunctionResults* find(std::string_view id) const;
};

/// One run of `f`, fully determined by (config, run_index).
RunRecord run_single(const ExperimentConfig& config, const testbed::TestFunction& f, std::size_t run_index,
                     bool keep_trace = true);

/// Every (function, run) pair, spread over config.jobs workers.
ExperimentResults run_experiment(const ExperimentConfig& config, bool keep_traces = true);

}  // namespace tsa::harness
