#include <doctest.h>

#include <cmath>
#include <vector>

#include "tsa/errors.hpp"
#include "tsa/testbed.hpp"

using namespace tsa;
using namespace tsa::testbed;

namespace {

double eval(std::string_view id, std::vector<double> x)
{
    return eval_function(*find_function(id), x);
}

std::vector<double> random_point(const TestFunction& f, RngStream& rng)
{
    std::vector<double> x;
    for (const auto& b : f.bounds)
        x.push_back(rng.uniform(b.lb, b.ub));
    return x;
}

}  // namespace

TEST_SUITE("testbed") {

TEST_CASE("suite composition")
{
    CHECK(classical_suite().size() == 20);
    CHECK(hard_suite().size() == 5);
    CHECK(all_functions().size() == 25);
    CHECK(suite_functions(Suite::classical30).size() == 12);
    CHECK(suite_functions(Suite::fixed).size() == 8);
    for (const auto* f : suite_functions(Suite::classical30))
        CHECK(f->default_dimension == 30);
    CHECK(find_function("nope") == nullptr);
}

TEST_CASE("table entries")
{
    const auto* fox = find_function("fc13");
    CHECK(fox->default_dimension == 2);
    CHECK(fox->known_optimum_value == 0.998004);
    CHECK(fox->bounds[0].lb == -65.53);
    CHECK(fox->bounds[0].ub == 65.53);

    const auto* branin = find_function("fc16");
    CHECK(branin->known_optimum_value == 0.398);
    CHECK(branin->bounds[0].lb == -5);
    CHECK(branin->bounds[0].ub == 10);
    CHECK(branin->bounds[1].lb == 0);
    CHECK(branin->bounds[1].ub == 15);

    const auto* h3 = find_function("fc18");
    CHECK(h3->default_dimension == 3);
    CHECK(h3->known_optimum_value == -3.8628);
    CHECK(h3->bounds[0].lb == 0);
    CHECK(h3->bounds[0].ub == 1);

    struct Row { const char* id; std::size_t dim; double lb, ub, opt; };
    for (const Row r : {Row{"h01", 5, 0, 60, 0.0}, Row{"h02", 2, 0, 14, 0.0}, Row{"h03", 2, -10, 10, -1.0},
                        Row{"h04", 30, -20, 20, -1.0}, Row{"h05", 30, -100, 100, -43.2535}}) {
        CAPTURE(r.id);
        const auto* f = find_function(r.id);
        CHECK(f->suite == Suite::hard);
        CHECK(f->default_dimension == r.dim);
        CHECK(f->bounds.front().lb == r.lb);
        CHECK(f->bounds.front().ub == r.ub);
        CHECK(f->known_optimum_value == r.opt);
    }
}

TEST_CASE("every known optimizer reproduces its optimum")
{
    for (const auto* f : all_functions()) {
        CAPTURE(f->id);
        REQUIRE(f->known_optimizer.has_value());
        const double v = eval_function(*f, *f->known_optimizer);
        CHECK(std::abs(v - f->known_optimum_value) <= f->optimum_tolerance);
    }
}

TEST_CASE("spot values")
{
    CHECK(eval("fc01", std::vector<double>(30, 0.0)) == 0.0);
    CHECK(eval("fc05", std::vector<double>(30, 1.0)) == 0.0);
    CHECK(eval("fc08", std::vector<double>(30, 0.0)) == 0.0);
    CHECK(std::abs(eval("fc09", std::vector<double>(30, 0.0))) <= 8.9e-16);
    CHECK(eval("fc15", {0.08984201, -0.7126564}) == doctest::Approx(-1.03163).epsilon(1e-4));
    CHECK(eval("fc15", {0.08984201, -0.7126564}) == doctest::Approx(-1.031628453489877).epsilon(1e-12));
    CHECK(eval("h02", {2.0, 2.0}) == 0.0);
    CHECK(eval("h03", {0.0, 5.0}) == -1.0);
    CHECK(eval("h04", std::vector<double>(30, 0.0)) == -1.0);
    CHECK(eval("h05", std::vector<double>(30, 1.4613638442701675)) == doctest::Approx(-43.25336329).epsilon(1e-9));
}

TEST_CASE("dimension checks")
{
    CHECK_THROWS_AS(eval("fc13", {0.0, 0.0, 0.0}), DimensionMismatch);
    CHECK_THROWS_AS(eval("fc05", {1.0}), DimensionMismatch);
    CHECK(eval_function(*find_function("fc01"), std::vector<double>(7, 1.0)) == 7.0);
    CHECK(find_function("fc01")->bounds_for(7).size() == 7);
}

TEST_CASE("even functions")
{
    RngStream rng(31);
    for (const char* id : {"fc01", "fc08", "fc09", "fc10"}) {
        CAPTURE(id);
        const auto& f = *find_function(id);
        for (int i = 0; i < 1000; ++i) {
            auto x = random_point(f, rng);
            auto y = x;
            for (auto& v : y)
                v = -v;
            REQUIRE(eval_function(f, x) == doctest::Approx(eval_function(f, y)).epsilon(1e-13));
        }
    }
}

TEST_CASE("non-negative functions")
{
    RngStream rng(32);
    for (const char* id : {"fc01", "fc02", "fc03", "fc04", "fc06", "fc08", "fc10"}) {
        CAPTURE(id);
        const auto& f = *find_function(id);
        for (int i = 0; i < 1000; ++i)
            REQUIRE(eval_function(f, random_point(f, rng)) >= 0.0);
    }
}

TEST_CASE("penalty helper")
{
    for (double x : {-10.0, -3.5, 0.0, 4.2, 10.0})
        CHECK(penalty(x, 10, 100, 4) == 0.0);
    CHECK(penalty(10.5, 10, 100, 4) == doctest::Approx(100 * std::pow(0.5, 4)));
    CHECK(penalty(-12.0, 10, 100, 4) == doctest::Approx(100 * 16.0));
    CHECK(penalty(5.1, 5, 100, 4) > 0.0);
}

TEST_CASE("Damavandi is finite on a grid through the singular lines")
{
    const auto& f = *find_function("h02");
    std::vector<double> axis;
    for (int i = 0; i <= 280; ++i)
        axis.push_back(0.05 * i);
    for (double d : {1e-15, 1e-12, 1e-9, 1e-6})
        axis.insert(axis.end(), {2.0 - d, 2.0 + d});
    for (double a : axis)
        for (double b : axis)
            REQUIRE(std::isfinite(eval_function(f, std::vector<double>{a, b})));
    CHECK(eval_function(f, std::vector<double>{2.0, 2.0 + 1e-13}) == doctest::Approx(0.0));
}

TEST_CASE("Quartic noise comes from the caller's stream")
{
    const auto& f = *find_function("fc07");
    const std::vector<double> zero(30, 0.0);
    CHECK(f.stochastic);
    CHECK(eval_function(f, zero) == 0.0);
    RngStream a(5), b(5);
    const double va = eval_function(f, zero, &a);
    CHECK(va >= 0.0);
    CHECK(va < 1.0);
    CHECK(va == eval_function(f, zero, &b));
}

}
