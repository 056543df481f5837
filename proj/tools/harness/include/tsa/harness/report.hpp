#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tsa/harness/experiment.hpp"

namespace tsa::harness {

/// One line of summary.csv.
struct ReportRow {
    std::string function_id;
    double mean = 0.0;
    double std = 0.0;
    double best = 0.0;
    std::size_t runs = 0;
    std::uint64_t max_fe = 0;
    double wall_time = 0.0;  ///< seconds, summed over runs
};

ReportRow report_row(const FunctionResults& results);

/// Writes `fe,best` rows. Throws std::logic_error, before writing anything,
/// if the best column ever increases.
void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace);

void write_summary_csv(std::ostream& out, const ExperimentResults& results);

std::string results_to_json(const ExperimentResults& results);

/// Inverse of results_to_json; traces are not stored and come back empty.
/// Throws ConfigError on malformed input.
ExperimentResults results_from_json(std::string_view text);
ExperimentResults load_results(const std::filesystem::path& file);

/// Creates `dir` and writes traces/<id>_run<k>.csv, summary.csv and
/// results.json. Throws IoError.
void write_outputs(const ExperimentResults& results, const std::filesystem::path& dir);

}  // namespace tsa::harness
