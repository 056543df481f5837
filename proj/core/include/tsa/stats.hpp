#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tsa::stats {

/// Precondition violations (mismatched lengths, too few samples, NaN).
class StatsError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Which side a test favours: the first sample ranks better (lower), worse,
/// or no significant difference.
enum class Direction { better, worse, tie };

/// "+", "-" or "=".
std::string_view to_string(Direction d);

struct SampleSet {
    std::string label;
    std::vector<double> values;
};

struct StatTestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    bool reject = false;  ///< p_value < alpha
    double alpha = 0.05;
    Direction direction = Direction::tie;
    bool degenerate = false;         ///< no rank information (all differences or values equal)
    std::vector<double> mean_ranks;  ///< per sample; for the paired test, of positive/negative differences
};

struct Summary {
    double mean = 0.0;
    double std = 0.0;  ///< sample deviation, n - 1 denominator; 0 for a single value
    double best = 0.0; ///< minimum
};

/// Paired two-sided Wilcoxon signed-rank test. Zero differences are dropped;
/// ties get mid-ranks. The statistic is min(W+, W-). For up to
/// kWilcoxonExactLimit non-zero pairs the p-value is exact over all sign
/// assignments, otherwise a tie-corrected normal approximation with
/// continuity correction is used.
inline constexpr std::size_t kWilcoxonExactLimit = 20;
StatTestResult wilcoxon_signed_rank(const SampleSet& a, const SampleSet& b, double alpha = 0.05);

/// Kruskal-Wallis H with tie correction; p-value from the chi-square upper
/// tail with k - 1 degrees of freedom. Direction reports whether the first
/// group has the lowest mean rank.
StatTestResult kruskal_wallis(std::span<const SampleSet> groups, double alpha = 0.05);

/// Per row (problem) affine map onto [0, 1]: (v - min) / (max - min).
/// Constant rows map to zeros.
std::vector<std::vector<double>> normalize_scores(const std::vector<std::vector<double>>& rows);

Summary summarize(std::span<const double> values);
inline Summary summarize(const SampleSet& s) { return summarize(s.values); }

/// 1-based ranks with ties sharing their average rank.
std::vector<double> midranks(std::span<const double> values);

/// Regularized upper incomplete gamma Q(a, x).
double regularized_gamma_q(double a, double x);

/// P(X > x) for a chi-square variable with `dof` degrees of freedom.
double chi_square_sf(double x, double dof);

/// P(Z > z) for a standard normal variable.
double normal_sf(double z);

}  // namespace tsa::stats
