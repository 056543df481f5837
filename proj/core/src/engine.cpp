#include "tsa/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tsa/errors.hpp"

namespace tsa {

namespace {

constexpr double kEscapeTowardBestShare = 0.8;

double euclidean_norm(std::span<const double> v)
{
    double s = 0.0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

double distance(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

void require_best(const TsaState& state, const Problem& problem)
{
    if (state.best.position.size() != problem.dimension())
        throw std::logic_error("tsa: state has no best solution for this problem");
}

SearchAgent select(const SearchAgent& parent, std::vector<double> candidate, TsaState& state,
                   const Problem& problem, const TsaConfig& config, Acceptance rule)
{
    repair_bounds(candidate, problem, state.rng);
    const double f = charge_evaluation(state, problem, candidate);
    if (config.immediate_elite && f < state.best.fitness)
        state.best = SearchAgent{candidate, f, true};
    if (rule == Acceptance::always || f < parent.fitness)
        return SearchAgent{std::move(candidate), f, true};
    return parent;
}

}  // namespace

void TsaConfig::validate() const
{
    if (pop_size == 0)
        throw ConfigError("pop_size must be positive");
    if (max_fe < pop_size)
        throw ConfigError("max_fe (" + std::to_string(max_fe) + ") must cover the initial population ("
                          + std::to_string(pop_size) + ")");
    if (!is_probability(p_switch) || !is_probability(p_esc) || !is_probability(p_restart))
        throw ConfigError("p_switch, p_esc and p_restart must lie in [0, 1]");
    for (double theta : {theta_max_intens, theta_max_explore, theta_max_escape})
        if (!(theta > 0.0 && theta < std::numbers::pi / 2))
            throw ConfigError("theta limits must lie in (0, pi/2)");
    if (!(replace_fraction_large > 0.0 && replace_fraction_large <= 1.0)
        || !(replace_fraction_small > 0.0 && replace_fraction_small <= 1.0))
        throw ConfigError("replace fractions must lie in (0, 1]");
}

std::size_t TsaConfig::replace_count(std::size_t dim) const
{
    const double f = dim <= small_dim_threshold ? replace_fraction_small : replace_fraction_large;
    const auto k = static_cast<std::size_t>(std::lround(f * static_cast<double>(dim)));
    return std::clamp<std::size_t>(k, 1, dim);
}

TsaState::TsaState(EvaluationBudget budget_, RngStream rng_, TraceOptions trace_options_)
    : budget(budget_), rng(std::move(rng_)), trace_options(trace_options_),
      best_seen(std::numeric_limits<double>::infinity())
{
    if (trace_options.stride == 0)
        throw ConfigError("trace stride must be positive");
}

std::uint64_t TsaState::schedule_time(ScheduleClock clock) const
{
    const std::uint64_t t = clock == ScheduleClock::evaluations ? budget.used() : iteration;
    return std::max<std::uint64_t>(t, 1);
}

namespace schedule {

double intensify_magnitude(double sign, double best_norm, std::size_t dim, std::uint64_t t)
{
    const double n = std::max(best_norm, kNormFloor);
    return 10.0 * sign * n * std::log(1.0 + 10.0 * static_cast<double>(dim) / static_cast<double>(t));
}

double explore_magnitude(double sign, double dist, std::uint64_t t)
{
    const double n = std::max(dist, kNormFloor);
    return sign * n / std::log(20.0 + static_cast<double>(t));
}

double escape_radius(double sign, std::uint64_t t)
{
    return 10.0 * sign / std::log(1.0 + static_cast<double>(t));
}

}  // namespace schedule

StepSample step1(TsaState& state, const Problem& problem, const TsaConfig& config)
{
    require_best(state, problem);
    StepSample s;
    s.sign = state.rng.sign();
    s.theta = state.rng.uniform(0.0, config.theta_max_intens);
    s.magnitude = schedule::intensify_magnitude(s.sign, euclidean_norm(state.best.position), problem.dimension(),
                                                state.schedule_time(config.clock));
    return s;
}

StepSample step2(TsaState& state, const SearchAgent& agent, const TsaConfig& config)
{
    StepSample s;
    s.sign = state.rng.sign();
    s.theta = state.rng.uniform(0.0, config.theta_max_explore);
    s.magnitude = schedule::explore_magnitude(s.sign, distance(state.best.position, agent.position),
                                              state.schedule_time(config.clock));
    return s;
}

IntensifyMove propose_intensify(const SearchAgent& agent, TsaState& state, const Problem& problem,
                                const TsaConfig& config)
{
    const std::size_t dim = problem.dimension();
    IntensifyMove move;
    move.step = step1(state, problem, config);
    const auto& best = state.best.position;

    move.position = agent.position;
    for (std::size_t i = 0; i < dim; ++i) {
        const double theta = (i == 0 || !config.per_dimension_theta)
                                 ? move.step.theta
                                 : state.rng.uniform(0.0, config.theta_max_intens);
        move.position[i] += move.step.magnitude * std::tan(theta) * (agent.position[i] - best[i]);
    }

    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    const std::size_t k = config.replace_count(dim);
    std::vector<std::size_t> order(dim);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t j = 0; j < k; ++j)
        std::swap(order[j], order[state.rng.uniform_index(j, dim - 1)]);
    move.replaced.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t i : move.replaced)
        move.position[i] = best[i];
    return move;
}

ExploreMove propose_explore(const SearchAgent& agent, TsaState& state, const Problem& problem,
                            const TsaConfig& config)
{
    const std::size_t dim = problem.dimension();
    ExploreMove move;
    move.step = step2(state, agent, config);
    move.position = agent.position;

    const double p = 1.0 / static_cast<double>(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (state.rng.uniform() >= p)
            continue;
        const double theta = (move.mutated_by_coin == 0 || !config.per_dimension_theta)
                                 ? move.step.theta
                                 : state.rng.uniform(0.0, config.theta_max_explore);
        move.position[i] += move.step.magnitude * std::tan(theta);
        ++move.mutated_by_coin;
    }
    if (move.mutated_by_coin == 0) {
        const std::size_t i = state.rng.uniform_index(0, dim - 1);
        move.position[i] += move.step.magnitude * std::tan(move.step.theta);
        move.forced = true;
    }
    return move;
}

EscapeMove propose_escape(const SearchAgent& agent, TsaState& state, const Problem& problem,
                          const TsaConfig& config)
{
    require_best(state, problem);
    const std::size_t dim = problem.dimension();
    EscapeMove move;
    move.radius = schedule::escape_radius(state.rng.sign(), state.schedule_time(config.clock));

    if (state.rng.uniform() >= 1.0 - config.p_restart) {
        move.kind = EscapeKind::restart;
        move.position = random_solution(problem, state.rng);
        return move;
    }

    const auto& best = state.best.position;
    move.position = agent.position;
    if (state.rng.uniform() < kEscapeTowardBestShare) {
        move.kind = EscapeKind::toward_best;
        const double shared = config.per_dimension_escape_rand ? 0.0 : state.rng.uniform();
        for (std::size_t i = 0; i < dim; ++i) {
            const double u = config.per_dimension_escape_rand ? state.rng.uniform() : shared;
            move.position[i] += move.radius * (best[i] - u * (best[i] - agent.position[i]));
        }
    } else {
        move.kind = EscapeKind::tangent_jump;
        for (std::size_t i = 0; i < dim; ++i) {
            const double theta = state.rng.uniform(0.0, config.theta_max_escape);
            move.position[i] += std::tan(theta) * problem.bounds(i).width();
        }
    }
    return move;
}

SearchAgent intensify(const SearchAgent& agent, TsaState& state, const Problem& problem, const TsaConfig& config)
{
    return select(agent, propose_intensify(agent, state, problem, config).position, state, problem, config, config.move_acceptance);
}

SearchAgent explore(const SearchAgent& agent, TsaState& state, const Problem& problem, const TsaConfig& config)
{
    return select(agent, propose_explore(agent, state, problem, config).position, state, problem, config, config.move_acceptance);
}

SearchAgent escape(const SearchAgent& agent, TsaState& state, const Problem& problem, const TsaConfig& config)
{
    return select(agent, propose_escape(agent, state, problem, config).position, state, problem, config, config.escape_acceptance);
}

double charge_evaluation(TsaState& state, const Problem& problem, std::span<const double> x)
{
    const double f = evaluate(problem, state.budget, x);
    if (f < state.best_seen)
        state.best_seen = f;
    const std::uint64_t used = state.budget.used();
    if (used % state.trace_options.stride == 0 || used == state.budget.max_fe())
        state.trace.records.push_back({used, state.best_seen});
    return f;
}

void update_best(TsaState& state)
{
    const auto it = std::min_element(state.population.begin(), state.population.end(),
                                     [](const SearchAgent& a, const SearchAgent& b) { return a.fitness < b.fitness; });
    if (it == state.population.end())
        return;
    if (state.best.position.empty() || it->fitness < state.best.fitness)
        state.best = *it;
}

TsaState initialize(const Problem& problem, const TsaConfig& config, RngStream rng, TraceOptions trace)
{
    config.validate();
    TsaState state(EvaluationBudget(config.max_fe), std::move(rng), trace);
    state.population.reserve(config.pop_size);
    for (std::size_t i = 0; i < config.pop_size; ++i) {
        auto x = random_solution(problem, state.rng);
        const double f = charge_evaluation(state, problem, x);
        state.population.push_back(SearchAgent{std::move(x), f, true});
    }
    update_best(state);
    return state;
}

void tsa_iteration(TsaState& state, const Problem& problem, const TsaConfig& config)
{
    if (state.budget.exhausted())
        throw BudgetExhausted("tsa_iteration: no evaluations left");

    for (auto& agent : state.population) {
        if (state.budget.exhausted())
            break;
        if (state.rng.uniform() < config.p_switch)
            agent = intensify(agent, state, problem, config);
        else
            agent = explore(agent, state, problem, config);
    }

    if (!state.budget.exhausted() && state.rng.uniform() < config.p_esc) {
        const std::size_t g = state.rng.uniform_index(0, state.population.size() - 1);
        state.population[g] = escape(state.population[g], state, problem, config);
    }

    update_best(state);
    if (state.trace_options.record_mean) {
        double sum = 0.0;
        for (const auto& a : state.population)
            sum += a.fitness;
        state.trace.mean_fitness.push_back(sum / static_cast<double>(state.population.size()));
    }
    ++state.iteration;
}

RunResult run(const Problem& problem, const TsaConfig& config, std::uint64_t seed, TraceOptions trace)
{
    const auto start = std::chrono::steady_clock::now();
    TsaState state = initialize(problem, config, RngStream(seed), trace);
    while (!state.budget.exhausted())
        tsa_iteration(state, problem, config);

    RunResult result;
    result.summary.best_fitness = state.best.fitness;
    result.summary.best_position = state.best.position;
    result.summary.used_fe = state.budget.used();
    result.summary.seed = seed;
    result.summary.iterations = state.iteration - 1;
    result.summary.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.trace = std::move(state.trace);
    return result;
}

}  // namespace tsa
