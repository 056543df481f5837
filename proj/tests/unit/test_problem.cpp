#include <doctest.h>

#include <cmath>
#include <vector>

#include "tsa/errors.hpp"
#include "tsa/problem.hpp"
#include "tsa/testbed.hpp"

using namespace tsa;

namespace {

Problem box(std::size_t dim, double lb, double ub)
{
    return Problem::uniform("box", dim, Bounds{lb, ub}, [](std::span<const double>) { return 0.0; });
}

}  // namespace

TEST_SUITE("problem") {

TEST_CASE("invalid bounds are rejected")
{
    auto f = [](std::span<const double>) { return 0.0; };
    CHECK_THROWS_AS(Problem("p", {Bounds{1.0, 1.0}}, f), ConfigError);
    CHECK_THROWS_AS(Problem("p", {Bounds{2.0, 1.0}}, f), ConfigError);
    CHECK_THROWS_AS(Problem("p", {}, f), ConfigError);
}

TEST_CASE("evaluate charges one evaluation")
{
    const auto* sphere = testbed::find_function("fc01");
    const auto* rosen = testbed::find_function("fc05");
    const Problem ps = testbed::make_problem(*sphere);
    const Problem pr = testbed::make_problem(*rosen);
    EvaluationBudget budget(3);
    CHECK(evaluate(ps, budget, std::vector<double>(30, 0.0)) == 0.0);
    CHECK(budget.used() == 1);
    CHECK(evaluate(pr, budget, std::vector<double>(30, 1.0)) == 0.0);
    CHECK(budget.used() == 2);
    CHECK_THROWS_AS(evaluate(ps, budget, std::vector<double>(29, 0.0)), DimensionMismatch);
    CHECK(budget.used() == 2);
    evaluate(ps, budget, std::vector<double>(30, 1.0));
    CHECK(budget.exhausted());
    CHECK_THROWS_AS(evaluate(ps, budget, std::vector<double>(30, 0.0)), BudgetExhausted);
    CHECK(budget.used() == 3);
}

TEST_CASE("random_solution with forced draws")
{
    {
        auto rng = RngStream::replay({0.5});
        CHECK(random_solution(box(1, -5, 5), rng) == std::vector<double>{0.0});
    }
    {
        auto rng = RngStream::replay({0.0, 0.0, 0.0});
        CHECK(random_solution(box(3, 0, 1), rng) == std::vector<double>{0.0, 0.0, 0.0});
    }
    {
        auto rng = RngStream::replay({0.25, 0.75});
        CHECK(random_solution(box(2, -100, 100), rng) == std::vector<double>{-50.0, 50.0});
    }
}

TEST_CASE("random_solution stays inside every suite box")
{
    RngStream rng(3);
    for (const auto* f : testbed::all_functions()) {
        const Problem p = testbed::make_problem(*f);
        for (int i = 0; i < 10000; ++i) {
            const auto x = random_solution(p, rng);
            REQUIRE(p.contains(x));
        }
    }
}

TEST_CASE("repair_bounds examples")
{
    const Problem p = box(2, -10, 10);
    {
        auto rng = RngStream::replay({});
        std::vector<double> x{3, -3};
        repair_bounds(x, p, rng);
        CHECK(x == std::vector<double>{3, -3});
    }
    {
        auto rng = RngStream::replay({0.5});
        std::vector<double> x{12, -3};
        repair_bounds(x, p, rng);
        CHECK(x == std::vector<double>{0, -3});
    }
    {
        auto rng = RngStream::replay({0.0, 0.999});
        std::vector<double> x{-11, 11};
        repair_bounds(x, p, rng);
        CHECK(x[0] == -10.0);
        CHECK(x[1] == doctest::Approx(9.98).epsilon(1e-12));
        CHECK(rng.replay_remaining() == 0);
    }
}

TEST_CASE("repair_bounds property: output in box, idempotent")
{
    const Problem p = box(8, -3, 7);
    RngStream rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<double> x(8);
        for (auto& v : x)
            v = rng.uniform(-30.0, 30.0);
        repair_bounds(x, p, rng);
        REQUIRE(p.contains(x));
        const auto before = x;
        repair_bounds(x, p, rng);
        REQUIRE(x == before);
    }
}

}
