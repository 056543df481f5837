#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tsa/rng.hpp"

namespace tsa {

/// Closed interval [lb, ub] for one coordinate; lb < ub.
struct Bounds {
    double lb = 0.0;
    double ub = 1.0;

    double width() const noexcept { return ub - lb; }
    bool contains(double v) const noexcept { return v >= lb && v <= ub; }
};

/// A box-bounded minimization problem.
///
/// Immutable once built. The objective may carry its own state (a noise
/// stream, for instance); such problems must not be shared between runs.
class Problem {
public:
    using Objective = std::function<double(std::span<const double>)>;

    Problem(std::string name, std::vector<Bounds> bounds, Objective objective);

    /// Same scalar range on every one of `dimension` coordinates.
    static Problem uniform(std::string name, std::size_t dimension, Bounds range, Objective objective);

    const std::string& name() const noexcept { return name_; }
    std::size_t dimension() const noexcept { return bounds_.size(); }
    const std::vector<Bounds>& bounds() const noexcept { return bounds_; }
    const Bounds& bounds(std::size_t i) const { return bounds_.at(i); }

    bool contains(std::span<const double> x) const noexcept;

    /// Calls the objective without budget accounting.
    double objective(std::span<const double> x) const { return objective_(x); }

private:
    std::string name_;
    std::vector<Bounds> bounds_;
    Objective objective_;
};

/// Function-evaluation counter; refuses requests beyond max_fe.
class EvaluationBudget {
public:
    explicit EvaluationBudget(std::uint64_t max_fe);

    std::uint64_t max_fe() const noexcept { return max_fe_; }
    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t remaining() const noexcept { return max_fe_ - used_; }
    bool exhausted() const noexcept { return used_ >= max_fe_; }

    /// Claims one evaluation; throws BudgetExhausted when none is left.
    void consume();

private:
    std::uint64_t max_fe_;
    std::uint64_t used_ = 0;
};

/// Candidate position with cached objective value.
struct SearchAgent {
    std::vector<double> position;
    double fitness = 0.0;
    bool fresh = false;  ///< fitness was computed at `position`
};

/// Budgeted objective call: returns f(x) and charges exactly one evaluation.
double evaluate(const Problem& problem, EvaluationBudget& budget, std::span<const double> x);

/// Uniform sample of the bounds box: lb_i + (ub_i - lb_i) * u_i.
std::vector<double> random_solution(const Problem& problem, RngStream& rng);

/// Resamples every out-of-range coordinate uniformly inside its bounds,
/// drawing one value per violated coordinate in index order.
void repair_bounds(std::span<double> x, const Problem& problem, RngStream& rng);

}  // namespace tsa
