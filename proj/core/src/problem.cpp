#include "tsa/problem.hpp"

#include <cmath>
#include <string>

#include "tsa/errors.hpp"

namespace tsa {

namespace {

// lb + (ub - lb) * u can round up to ub for u close to 1; keep it half-open.
double sample_in(const Bounds& b, double u)
{
    const double v = b.lb + b.width() * u;
    return v < b.ub ? v : std::nextafter(b.ub, b.lb);
}

}  // namespace

Problem::Problem(std::string name, std::vector<Bounds> bounds, Objective objective)
    : name_(std::move(name)), bounds_(std::move(bounds)), objective_(std::move(objective))
{
    if (bounds_.empty())
        throw ConfigError("problem '" + name_ + "': dimension must be at least 1");
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        const auto& b = bounds_[i];
        if (!(b.lb < b.ub) || !std::isfinite(b.lb) || !std::isfinite(b.ub))
            throw ConfigError("problem '" + name_ + "': invalid bounds on coordinate " + std::to_string(i));
    }
    if (!objective_)
        throw ConfigError("problem '" + name_ + "': missing objective");
}

Problem Problem::uniform(std::string name, std::size_t dimension, Bounds range, Objective objective)
{
    return Problem(std::move(name), std::vector<Bounds>(dimension, range), std::move(objective));
}

bool Problem::contains(std::span<const double> x) const noexcept
{
    if (x.size() != bounds_.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!bounds_[i].contains(x[i]))
            return false;
    return true;
}

EvaluationBudget::EvaluationBudget(std::uint64_t max_fe) : max_fe_(max_fe)
{
    if (max_fe == 0)
        throw ConfigError("evaluation budget must be positive");
}

void EvaluationBudget::consume()
{
    if (exhausted())
        throw BudgetExhausted("evaluation budget of " + std::to_string(max_fe_) + " exhausted");
    ++used_;
}

double evaluate(const Problem& problem, EvaluationBudget& budget, std::span<const double> x)
{
    if (x.size() != problem.dimension())
        throw DimensionMismatch("expected " + std::to_string(problem.dimension()) + " coordinates, got "
                                + std::to_string(x.size()));
    budget.consume();
    return problem.objective(x);
}

std::vector<double> random_solution(const Problem& problem, RngStream& rng)
{
    std::vector<double> x(problem.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = sample_in(problem.bounds(i), rng.uniform());
    }
    return x;
}

void repair_bounds(std::span<double> x, const Problem& problem, RngStream& rng)
{
    if (x.size() != problem.dimension())
        throw DimensionMismatch("repair_bounds: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& b = problem.bounds(i);
        // NaN fails both comparisons, so test containment directly.
        if (!b.contains(x[i]))
            x[i] = sample_in(b, rng.uniform());
    }
}

}  // namespace tsa
