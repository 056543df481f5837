#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsa/harness/experiment.hpp"
#include "tsa/stats.hpp"

namespace tsa::harness {

/// Result sets do not cover the same functions.
class FunctionSetMismatch : public std::runtime_error {
public:
    FunctionSetMismatch(std::string reference, std::string other, std::vector<std::string> only_in_reference,
                        std::vector<std::string> only_in_other);

    std::string reference;
    std::string other;
    std::vector<std::string> only_in_reference;
    std::vector<std::string> only_in_other;
};

struct PairwiseRow {
    std::string reference;
    std::string other;
    std::optional<stats::StatTestResult> test;  ///< empty when there are too few functions
    std::string note;
};

struct ComparisonReport {
    std::vector<std::string> labels;
    std::vector<std::string> function_ids;
    std::vector<std::vector<double>> means;       ///< function x result set
    std::vector<std::vector<double>> normalized;  ///< same shape, rows in [0, 1]
    std::vector<PairwiseRow> wilcoxon;            ///< first set against each other one
    stats::StatTestResult kruskal;
    double alpha = 0.05;
};

/// Per-function mean best fitness of each set, normalized per function,
/// then Wilcoxon (reference = first set) and Kruskal-Wallis on the
/// normalized scores. Needs at least two sets.
ComparisonReport compare_results(const std::vector<ExperimentResults>& sets, double alpha = 0.05);

void write_comparison(std::ostream& out, const ComparisonReport& report);

}  // namespace tsa::harness
