#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "tsa/problem.hpp"
#include "tsa/rng.hpp"

namespace tsa {

/// Which counter feeds t in the step-size schedules.
enum class ScheduleClock {
    evaluations,  ///< function evaluations used so far (the default)
    iterations,   ///< completed population sweeps, starting at 1
};

/// How a candidate competes with the agent it was derived from.
enum class Acceptance {
    greedy,  ///< replace only on strict improvement
    always,  ///< replace unconditionally
};

/// Tunable parameters of the tangent search.
struct TsaConfig {
    std::size_t pop_size = 20;
    std::uint64_t max_fe = 50'000;

    double p_switch = 0.3;   ///< probability of intensification (else exploration)
    double p_esc = 0.8;      ///< probability of one escape move per iteration
    double p_restart = 0.01; ///< probability that an escape move is a fresh random point

    double theta_max_intens = std::numbers::pi / 2.1;
    double theta_max_explore = std::numbers::pi / 3.0;
    double theta_max_escape = std::numbers::pi / 2.1;

    /// Share of coordinates copied from the best solution after a local walk.
    double replace_fraction_large = 0.20;
    double replace_fraction_small = 0.50;
    std::size_t small_dim_threshold = 4;  ///< dimensions <= this use the small share

    ScheduleClock clock = ScheduleClock::evaluations;
    Acceptance move_acceptance = Acceptance::greedy;    ///< intensify and explore
    Acceptance escape_acceptance = Acceptance::always;
    /// Update the elite as soon as an evaluation beats it, instead of after the sweep.
    bool immediate_elite = true;
    /// One theta per moved coordinate instead of one per candidate.
    bool per_dimension_theta = false;
    /// One uniform per coordinate in the toward-best escape instead of one per move.
    bool per_dimension_escape_rand = false;

    /// Throws ConfigError on out-of-range values.
    void validate() const;

    /// Number of coordinates overwritten with the best solution in dimension `dim`.
    std::size_t replace_count(std::size_t dim) const;
};

/// One draw of a tangent-flight step: direction, angle, and scaled magnitude.
struct StepSample {
    double theta = 0.0;
    double sign = 1.0;
    double magnitude = 0.0;
};

struct TraceRecord {
    std::uint64_t used_fe = 0;
    double best_fitness = 0.0;
};

/// Best-so-far history sampled over function evaluations.
struct ConvergenceTrace {
    std::vector<TraceRecord> records;
    std::vector<double> mean_fitness;  ///< population mean after each iteration, when enabled
};

struct TraceOptions {
    std::uint64_t stride = 1;  ///< record every stride-th evaluation; the last one is always kept
    bool record_mean = false;
};

struct RunSummary {
    double best_fitness = 0.0;
    std::vector<double> best_position;
    std::uint64_t used_fe = 0;
    std::uint64_t seed = 0;
    std::uint64_t iterations = 0;
    double wall_time = 0.0;  ///< seconds
};

struct RunResult {
    RunSummary summary;
    ConvergenceTrace trace;
};

/// Mutable state of one run. Owns its budget, random stream, and trace.
struct TsaState {
    TsaState(EvaluationBudget budget_, RngStream rng_, TraceOptions trace_options_ = {});

    std::vector<SearchAgent> population;
    SearchAgent best;            ///< elite copy; see TsaConfig::immediate_elite
    std::uint64_t iteration = 1; ///< sweep counter
    EvaluationBudget budget;
    RngStream rng;
    ConvergenceTrace trace;
    TraceOptions trace_options;
    double best_seen;            ///< minimum over every evaluation so far

    /// Value of t for the schedules under `clock`; never below 1.
    std::uint64_t schedule_time(ScheduleClock clock) const;
};

/// Step-size schedules. Norms below kNormFloor are raised to it so a
/// population collapsed onto its best point still produces finite steps.
namespace schedule {

inline constexpr double kNormFloor = 1e-30;

/// 10 * sign * |best| * ln(1 + 10 * dim / t); drives intensification.
double intensify_magnitude(double sign, double best_norm, std::size_t dim, std::uint64_t t);

/// sign * |best - x| / ln(20 + t); drives exploration.
double explore_magnitude(double sign, double distance, std::uint64_t t);

/// 10 * sign / ln(1 + t); the escape move radius.
double escape_radius(double sign, std::uint64_t t);

}  // namespace schedule

/// Candidate produced by the intensification walk, before bound repair.
struct IntensifyMove {
    std::vector<double> position;
    std::vector<std::size_t> replaced;  ///< coordinates copied from the best solution
    StepSample step;
};

/// Candidate produced by the exploration walk, before bound repair.
struct ExploreMove {
    std::vector<double> position;
    std::size_t mutated_by_coin = 0;  ///< coordinates selected by the 1/D coin flips
    bool forced = false;              ///< no coin succeeded; one coordinate was picked
    StepSample step;
};

enum class EscapeKind { toward_best, tangent_jump, restart };

struct EscapeMove {
    std::vector<double> position;
    EscapeKind kind = EscapeKind::toward_best;
    double radius = 0.0;
};

// Draw order matters for reproducibility; each function documents what it
// consumes from state.rng.

/// Intensification step. Draws: sign, theta.
StepSample step1(TsaState& state, const Problem& problem, const TsaConfig& config);

/// Exploration step relative to `agent`. Draws: sign, theta.
StepSample step2(TsaState& state, const SearchAgent& agent, const TsaConfig& config);

/// Local walk around the best solution followed by a partial copy of it.
/// Draws: step1; with per_dimension_theta, one theta per coordinate after
/// the first; then one index per replaced coordinate.
IntensifyMove propose_intensify(const SearchAgent& agent, TsaState& state, const Problem& problem,
                                const TsaConfig& config);

/// Global walk mutating each coordinate with probability 1/D.
/// Draws: step2, then one coin per coordinate (plus a theta for every
/// selected coordinate after the first when per_dimension_theta is set).
/// If no coin succeeds, one index.
ExploreMove propose_explore(const SearchAgent& agent, TsaState& state, const Problem& problem,
                            const TsaConfig& config);

/// Escape move. Draws: sign, restart coin, then either a full random
/// solution, or the branch coin followed by the branch's uniforms
/// (toward-best: one, or one per coordinate; tangent jump: one theta per
/// coordinate).
EscapeMove propose_escape(const SearchAgent& agent, TsaState& state, const Problem& problem,
                          const TsaConfig& config);

// The three moves below repair, evaluate once, and return either the
// candidate or `agent` according to the configured acceptance rule.

SearchAgent intensify(const SearchAgent& agent, TsaState& state, const Problem& problem, const TsaConfig& config);
SearchAgent explore(const SearchAgent& agent, TsaState& state, const Problem& problem, const TsaConfig& config);
SearchAgent escape(const SearchAgent& agent, TsaState& state, const Problem& problem, const TsaConfig& config);

/// Evaluates `x` against the state's budget and records the trace.
double charge_evaluation(TsaState& state, const Problem& problem, std::span<const double> x);

/// Random population of config.pop_size agents (pop_size evaluations).
TsaState initialize(const Problem& problem, const TsaConfig& config, RngStream rng, TraceOptions trace = {});

/// One sweep over the population plus an optional escape move, then the
/// elite update. Stops early when the budget runs out mid-sweep.
void tsa_iteration(TsaState& state, const Problem& problem, const TsaConfig& config);

/// Copies the population minimum into state.best when it improves on it.
void update_best(TsaState& state);

/// Full run until the evaluation budget is spent.
RunResult run(const Problem& problem, const TsaConfig& config, std::uint64_t seed, TraceOptions trace = {});

}  // namespace tsa
