#include "tsa/testbed.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "tsa/errors.hpp"

namespace tsa::testbed {

namespace {

using std::numbers::pi;
using Vec = std::span<const double>;

// --- classical 30-dimensional functions -----------------------------------

double sphere(Vec x, RngStream*)
{
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return s;
}

double schwefel_2_22(Vec x, RngStream*)
{
    double sum = 0.0;
    double prod = 1.0;
    for (double v : x) {
        sum += std::abs(v);
        prod *= std::abs(v);
    }
    return sum + prod;
}

double schwefel_1_2(Vec x, RngStream*)
{
    double s = 0.0;
    double partial = 0.0;
    for (double v : x) {
        partial += v;
        s += partial * partial;
    }
    return s;
}

double schwefel_2_21(Vec x, RngStream*)
{
    double m = 0.0;
    for (double v : x)
        m = std::max(m, std::abs(v));
    return m;
}

double rosenbrock(Vec x, RngStream*)
{
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double step(Vec x, RngStream*)
{
    double s = 0.0;
    for (double v : x) {
        const double f = std::floor(v + 0.5);
        s += f * f;
    }
    return s;
}

double quartic(Vec x, RngStream* noise)
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double sq = x[i] * x[i];
        s += static_cast<double>(i + 1) * sq * sq;
    }
    return noise ? s + noise->uniform() : s;
}

// Term order keeps x^2 - 10 cos + 10 at exactly zero for tiny |x|.
double rastrigin(Vec x, RngStream*)
{
    double s = 0.0;
    for (double v : x)
        s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
    return s;
}

double ackley(Vec x, RngStream*)
{
    const double n = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double griewank(Vec x, RngStream*)
{
    double s = 0.0;
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - p + 1.0;
}

double penalized(Vec x, RngStream*)
{
    const std::size_t n = x.size();
    auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    const double s1 = std::sin(pi * y(0));
    double s = 10.0 * s1 * s1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = y(i) - 1.0;
        const double b = std::sin(pi * y(i + 1));
        s += a * a * (1.0 + 10.0 * b * b);
    }
    const double last = y(n - 1) - 1.0;
    s += last * last;
    double pen = 0.0;
    for (double v : x)
        pen += penalty(v, 10.0, 100.0, 4.0);
    return pi / static_cast<double>(n) * s + pen;
}

double penalized2(Vec x, RngStream*)
{
    const std::size_t n = x.size();
    const double s1 = std::sin(3.0 * pi * x[0]);
    double s = s1 * s1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = x[i] - 1.0;
        const double b = std::sin(3.0 * pi * x[i + 1]);
        s += a * a * (1.0 + b * b);
    }
    const double a = x[n - 1] - 1.0;
    const double b = std::sin(2.0 * pi * x[n - 1]);
    s += a * a * (1.0 + b * b);
    double pen = 0.0;
    for (double v : x)
        pen += penalty(v, 5.0, 100.0, 4.0);
    return 0.1 * s + pen;
}

// --- classical fixed-dimension functions ----------------------------------

double foxholes(Vec x, RngStream*)
{
    constexpr std::array<double, 5> grid{-32.0, -16.0, 0.0, 16.0, 32.0};
    double s = 1.0 / 500.0;
    for (std::size_t j = 0; j < 25; ++j) {
        const double d1 = x[0] - grid[j % 5];
        const double d2 = x[1] - grid[j / 5];
        s += 1.0 / (static_cast<double>(j + 1) + std::pow(d1, 6) + std::pow(d2, 6));
    }
    return 1.0 / s;
}

double kowalik(Vec x, RngStream*)
{
    constexpr std::array<double, 11> a{0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                       0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
    constexpr std::array<double, 11> inv_b{0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0};
    double s = 0.0;
    for (std::size_t i = 0; i < 11; ++i) {
        const double b = 1.0 / inv_b[i];
        const double r = a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        s += r * r;
    }
    return s;
}

double six_hump_camel(Vec x, RngStream*)
{
    const double a = x[0] * x[0];
    const double b = x[1] * x[1];
    return 4.0 * a - 2.1 * a * a + a * a * a / 3.0 + x[0] * x[1] - 4.0 * b + 4.0 * b * b;
}

double branin(Vec x, RngStream*)
{
    const double b = 5.1 / (4.0 * pi * pi);
    const double c = 5.0 / pi;
    const double t = 1.0 / (8.0 * pi);
    const double q = x[1] - b * x[0] * x[0] + c * x[0] - 6.0;
    return q * q + 10.0 * (1.0 - t) * std::cos(x[0]) + 10.0;
}

double goldstein_price(Vec x, RngStream*)
{
    const double x1 = x[0];
    const double x2 = x[1];
    const double s = x1 + x2 + 1.0;
    const double d = 2.0 * x1 - 3.0 * x2;
    const double a = 1.0 + s * s * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
    const double b = 30.0 + d * d * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
    return a * b;
}

template <std::size_t D>
double hartman(Vec x, const std::array<std::array<double, D>, 4>& a, const std::array<std::array<double, D>, 4>& p)
{
    constexpr std::array<double, 4> c{1.0, 1.2, 3.0, 3.2};
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        double inner = 0.0;
        for (std::size_t j = 0; j < D; ++j) {
            const double d = x[j] - p[i][j];
            inner += a[i][j] * d * d;
        }
        s += c[i] * std::exp(-inner);
    }
    return -s;
}

double hartman3(Vec x, RngStream*)
{
    static constexpr std::array<std::array<double, 3>, 4> a{{
        {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}}};
    static constexpr std::array<std::array<double, 3>, 4> p{{
        {0.3689, 0.1170, 0.2673}, {0.4699, 0.4387, 0.7470}, {0.1091, 0.8732, 0.5547}, {0.03815, 0.5743, 0.8828}}};
    return hartman<3>(x, a, p);
}

double hartman6(Vec x, RngStream*)
{
    static constexpr std::array<std::array<double, 6>, 4> a{{
        {10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
        {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
        {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
        {17.0, 8.0, 0.05, 10.0, 0.1, 14.0}}};
    static constexpr std::array<std::array<double, 6>, 4> p{{
        {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
        {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
        {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
        {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}}};
    return hartman<6>(x, a, p);
}

// -sum_i 1 / (|x - a_i|^2 + c_i) over five centres in four dimensions.
double shekel5(Vec x, RngStream*)
{
    static constexpr std::array<std::array<double, 4>, 5> a{{
        {4.0, 4.0, 4.0, 4.0}, {1.0, 1.0, 1.0, 1.0}, {8.0, 8.0, 8.0, 8.0}, {6.0, 6.0, 6.0, 6.0}, {3.0, 7.0, 3.0, 7.0}}};
    static constexpr std::array<double, 5> c{0.1, 0.2, 0.2, 0.4, 0.4};
    double s = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        double d2 = 0.0;
        for (std::size_t j = 0; j < 4; ++j) {
            const double d = x[j] - a[i][j];
            d2 += d * d;
        }
        s += 1.0 / (d2 + c[i]);
    }
    return -s;
}

// --- hard functions --------------------------------------------------------

double devilliers_glasser02(Vec x, RngStream*)
{
    double s = 0.0;
    for (int i = 1; i <= 24; ++i) {
        const double t = 0.1 * (i - 1);
        const double y = 53.81 * std::pow(1.27, t) * std::tanh(3.012 * t + std::sin(2.13 * t)) * std::cos(std::exp(0.507) * t);
        const double m = x[0] * std::pow(x[1], t) * std::tanh(x[2] * t + std::sin(x[3] * t)) * std::cos(std::exp(x[4]) * t);
        const double r = m - y;
        s += r * r;
    }
    return s;
}

// sin(pi z) / (pi z) with its limit 1 at z = 0.
double sinc_pi(double z)
{
    if (std::abs(z) < 1e-12)
        return 1.0;
    return std::sin(pi * z) / (pi * z);
}

double damavandi(Vec x, RngStream*)
{
    const double ratio = std::abs(sinc_pi(x[0] - 2.0) * sinc_pi(x[1] - 2.0));
    const double a = x[0] - 7.0;
    const double b = x[1] - 7.0;
    return (1.0 - std::pow(ratio, 5)) * (2.0 + a * a + 2.0 * b * b);
}

double cross_leg_table(Vec x, RngStream*)
{
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
    const double v = std::abs(std::sin(x[0]) * std::sin(x[1]) * std::exp(std::abs(100.0 - r / pi)));
    return -std::pow(v + 1.0, -0.1);
}

double xin_she_yang03(Vec x, RngStream*)
{
    constexpr double beta = 15.0;
    constexpr int m = 3;
    double s1 = 0.0;
    double s2 = 0.0;
    double prod = 1.0;
    for (double v : x) {
        s1 += std::pow(v / beta, 2 * m);
        s2 += v * v;
        const double c = std::cos(v);
        prod *= c * c;
    }
    return std::exp(-s1) - 2.0 * std::exp(-s2) * prod;
}

double sine_envelope(Vec x, RngStream*)
{
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double r2 = x[i + 1] * x[i + 1] + x[i] * x[i];
        const double num = std::sin(std::sqrt(r2) - 0.5);
        const double den = 0.001 * r2 + 1.0;
        s += num * num / (den * den) + 0.5;
    }
    return -s;
}

// Radius maximizing sin^2(r - 0.5) / (1 + 0.001 r^2)^2; each coordinate of
// the optimizer is this radius divided by sqrt(2).
constexpr double kSineEnvelopeCoordinate = 1.4613638442701675;

std::vector<Bounds> same(std::size_t n, double lb, double ub) { return std::vector<Bounds>(n, Bounds{lb, ub}); }

TestFunction scalable(std::string id, std::string name, Suite suite, Modality m, double lb, double ub, double opt_coord,
                      double opt_value, Evaluator e, std::size_t min_dim = 1)
{
    TestFunction f;
    f.id = std::move(id);
    f.name = std::move(name);
    f.suite = suite;
    f.modality = m;
    f.default_dimension = 30;
    f.scalable = true;
    f.min_dimension = min_dim;
    f.bounds = same(30, lb, ub);
    f.known_optimum_value = opt_value;
    f.known_optimizer = std::vector<double>(30, opt_coord);
    f.evaluator = e;
    return f;
}

TestFunction fixed(std::string id, std::string name, Suite suite, Modality m, std::vector<Bounds> bounds,
                   std::vector<double> optimizer, double opt_value, double tol, Evaluator e)
{
    TestFunction f;
    f.id = std::move(id);
    f.name = std::move(name);
    f.suite = suite;
    f.modality = m;
    f.default_dimension = bounds.size();
    f.min_dimension = bounds.size();
    f.bounds = std::move(bounds);
    f.known_optimum_value = opt_value;
    f.known_optimizer = std::move(optimizer);
    f.optimum_tolerance = tol;
    f.evaluator = e;
    return f;
}

std::vector<TestFunction> build_classical()
{
    const auto C = Suite::classical30;
    const auto F = Suite::fixed;
    std::vector<TestFunction> v;
    v.push_back(scalable("fc01", "Sphere", C, Modality::US, -100, 100, 0.0, 0.0, sphere));
    v.push_back(scalable("fc02", "Schwefel 2.22", C, Modality::UN, -10, 10, 0.0, 0.0, schwefel_2_22));
    v.push_back(scalable("fc03", "Schwefel 1.2", C, Modality::UN, -100, 100, 0.0, 0.0, schwefel_1_2));
    v.push_back(scalable("fc04", "Schwefel 2.21", C, Modality::US, -100, 100, 0.0, 0.0, schwefel_2_21));
    v.push_back(scalable("fc05", "Rosenbrock", C, Modality::UN, -30, 30, 1.0, 0.0, rosenbrock, 2));
    v.push_back(scalable("fc06", "Step", C, Modality::US, -100, 100, 0.0, 0.0, step));
    auto q = scalable("fc07", "Quartic", C, Modality::US, -1.28, 1.28, 0.0, 0.0, quartic);
    q.stochastic = true;
    v.push_back(std::move(q));
    v.push_back(scalable("fc08", "Rastrigin", C, Modality::MS, -5.12, 5.12, 0.0, 0.0, rastrigin));
    v.push_back(scalable("fc09", "Ackley", C, Modality::MS, -32, 32, 0.0, 0.0, ackley));
    v.push_back(scalable("fc10", "Griewank", C, Modality::MN, -600, 600, 0.0, 0.0, griewank));
    v.push_back(scalable("fc11", "Penalized", C, Modality::MN, -50, 50, -1.0, 0.0, penalized));
    v.push_back(scalable("fc12", "Penalized2", C, Modality::MN, -50, 50, 1.0, 0.0, penalized2));
    // Ackley at the origin leaves a floating-point residual of a few ulps.
    v[8].optimum_tolerance = 1e-15;

    v.push_back(fixed("fc13", "Foxholes", F, Modality::MS, same(2, -65.53, 65.53), {-32.0, -32.0}, 0.998004, 1e-3,
                      foxholes));
    v.push_back(fixed("fc14", "Kowalik", F, Modality::MS, same(4, -5, 5), {0.192833, 0.190836, 0.123117, 0.135766},
                      0.0003075, 1e-6, kowalik));
    v.push_back(fixed("fc15", "Six Hump Camel Back", F, Modality::MN, same(2, -5, 5), {0.08984201, -0.7126564},
                      -1.03163, 1e-4, six_hump_camel));
    v.push_back(fixed("fc16", "Branin", F, Modality::MS, {Bounds{-5, 10}, Bounds{0, 15}}, {pi, 2.275}, 0.398, 1e-3,
                      branin));
    v.push_back(fixed("fc17", "Goldstein Price", F, Modality::MN, same(2, -5, 5), {0.0, -1.0}, 3.0, 1e-6,
                      goldstein_price));
    v.push_back(fixed("fc18", "Hartman 3", F, Modality::MN, same(3, 0, 1), {0.114614, 0.555649, 0.852547}, -3.8628,
                      1e-3, hartman3));
    v.push_back(fixed("fc19", "Hartman 6", F, Modality::MN, same(6, 0, 1),
                      {0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573}, -3.3220, 1e-3, hartman6));
    v.push_back(fixed("fc20", "Langermann", F, Modality::MN, same(4, 0, 10), {4.00004, 4.00013, 4.00004, 4.00013},
                      -10.1532, 1e-3, shekel5));
    return v;
}

std::vector<TestFunction> build_hard()
{
    const auto H = Suite::hard;
    std::vector<TestFunction> v;
    v.push_back(fixed("h01", "DeVilliersGlasser02", H, Modality::MN, same(5, 0, 60), {53.81, 1.27, 3.012, 2.13, 0.507},
                      0.0, 1e-6, devilliers_glasser02));
    v.push_back(fixed("h02", "Damavandi", H, Modality::MN, same(2, 0, 14), {2.0, 2.0}, 0.0, 1e-6, damavandi));
    v.push_back(fixed("h03", "CrossLegTable", H, Modality::MN, same(2, -10, 10), {0.0, 0.0}, -1.0, 1e-6,
                      cross_leg_table));
    v.push_back(scalable("h04", "XinSheYang03", H, Modality::MN, -20, 20, 0.0, -1.0, xin_she_yang03));
    auto se = scalable("h05", "SineEnvelope", H, Modality::MN, -100, 100, kSineEnvelopeCoordinate, -43.2535,
                       sine_envelope, 2);
    se.optimum_tolerance = 1e-3;
    v.push_back(std::move(se));
    return v;
}

}  // namespace

std::string_view to_string(Modality m)
{
    switch (m) {
    case Modality::US: return "US";
    case Modality::UN: return "UN";
    case Modality::MS: return "MS";
    case Modality::MN: return "MN";
    }
    return "?";
}

std::string_view to_string(Suite s)
{
    switch (s) {
    case Suite::classical30: return "classical30";
    case Suite::fixed: return "fixed";
    case Suite::hard: return "hard";
    }
    return "?";
}

double penalty(double x, double a, double k, double m)
{
    if (x > a)
        return k * std::pow(x - a, m);
    if (x < -a)
        return k * std::pow(-x - a, m);
    return 0.0;
}

std::vector<Bounds> TestFunction::bounds_for(std::size_t dim) const
{
    if (!accepts_dimension(dim))
        throw DimensionMismatch(id + ": dimension " + std::to_string(dim) + " not supported");
    if (!scalable)
        return bounds;
    return std::vector<Bounds>(dim, bounds.front());
}

bool TestFunction::accepts_dimension(std::size_t dim) const
{
    return scalable ? dim >= min_dimension : dim == default_dimension;
}

const std::vector<TestFunction>& classical_suite()
{
    static const std::vector<TestFunction> suite = build_classical();
    return suite;
}

const std::vector<TestFunction>& hard_suite()
{
    static const std::vector<TestFunction> suite = build_hard();
    return suite;
}

const std::vector<const TestFunction*>& all_functions()
{
    static const std::vector<const TestFunction*> all = [] {
        std::vector<const TestFunction*> v;
        for (const auto& f : classical_suite())
            v.push_back(&f);
        for (const auto& f : hard_suite())
            v.push_back(&f);
        return v;
    }();
    return all;
}

std::vector<const TestFunction*> suite_functions(Suite s)
{
    std::vector<const TestFunction*> v;
    for (const auto* f : all_functions())
        if (f->suite == s)
            v.push_back(f);
    return v;
}

const TestFunction* find_function(std::string_view id)
{
    for (const auto* f : all_functions())
        if (f->id == id)
            return f;
    return nullptr;
}

double eval_function(const TestFunction& f, std::span<const double> x, RngStream* noise)
{
    if (!f.accepts_dimension(x.size()))
        throw DimensionMismatch(f.id + ": cannot evaluate a point of dimension " + std::to_string(x.size()));
    return f.evaluator(x, noise);
}

Problem make_problem(const TestFunction& f, std::optional<std::size_t> dim, std::uint64_t noise_seed)
{
    const std::size_t d = dim.value_or(f.default_dimension);
    auto bounds = f.bounds_for(d);
    const Evaluator e = f.evaluator;
    if (f.stochastic) {
        auto noise = std::make_shared<RngStream>(noise_seed);
        return Problem(f.id, std::move(bounds), [e, noise](std::span<const double> x) { return e(x, noise.get()); });
    }
    return Problem(f.id, std::move(bounds), [e](std::span<const double> x) { return e(x, nullptr); });
}

}  // namespace tsa::testbed
