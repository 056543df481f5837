#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsa/problem.hpp"
#include "tsa/rng.hpp"

namespace tsa::testbed {

/// Unimodal/Multimodal x Separable/Non-separable.
enum class Modality { US, UN, MS, MN };

std::string_view to_string(Modality m);

enum class Suite { classical30, fixed, hard };

std::string_view to_string(Suite s);

using Evaluator = double (*)(std::span<const double> x, RngStream* noise);

/// A benchmark function with its reference box and known optimum.
struct TestFunction {
    std::string id;
    std::string name;
    Suite suite = Suite::classical30;
    Modality modality = Modality::MN;
    std::size_t default_dimension = 2;
    bool scalable = false;           ///< accepts any dimension >= min_dimension
    std::size_t min_dimension = 1;
    std::vector<Bounds> bounds;      ///< at default_dimension
    double known_optimum_value = 0.0;        ///< at default_dimension
    std::optional<std::vector<double>> known_optimizer;
    double optimum_tolerance = 1e-6;
    bool stochastic = false;         ///< adds noise drawn from the caller's stream
    Evaluator evaluator = nullptr;

    /// Bounds for dimension `dim`; scalable functions repeat their scalar range.
    std::vector<Bounds> bounds_for(std::size_t dim) const;
    bool accepts_dimension(std::size_t dim) const;
};

/// fc01-fc20: twelve 30-dimensional functions and eight fixed-dimension ones.
const std::vector<TestFunction>& classical_suite();

/// h01-h05: DeVilliersGlasser02, Damavandi, CrossLegTable, XinSheYang03, SineEnvelope.
const std::vector<TestFunction>& hard_suite();

/// Classical followed by hard functions.
const std::vector<const TestFunction*>& all_functions();

std::vector<const TestFunction*> suite_functions(Suite s);

/// Lookup by id ("fc08", "h02"); nullptr when unknown.
const TestFunction* find_function(std::string_view id);

/// Formula value at x. Noisy functions add a uniform [0,1) draw from
/// `noise` when one is supplied and are noise-free otherwise.
/// Throws DimensionMismatch for a dimension the function does not accept.
double eval_function(const TestFunction& f, std::span<const double> x, RngStream* noise = nullptr);

/// Wraps a test function as an optimization problem. Noisy functions get a
/// private stream seeded with `noise_seed`, so the problem belongs to one run.
Problem make_problem(const TestFunction& f, std::optional<std::size_t> dim = std::nullopt,
                     std::uint64_t noise_seed = 0);

/// Penalty term u(x, a, k, m) of the penalized functions.
double penalty(double x, double a, double k, double m);

}  // namespace tsa::testbed
