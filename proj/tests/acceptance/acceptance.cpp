// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Budgets follow the benchmark protocol: population 20, 50,000 evaluations
// for 30-dimensional and hard functions, 10,000 for fixed-dimension ones,
// 30 runs with seeds 0..29.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "tsa/engine.hpp"
#include "tsa/errors.hpp"
#include "tsa/harness/experiment.hpp"
#include "tsa/stats.hpp"
#include "tsa/testbed.hpp"

using namespace tsa;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail)
{
    std::printf("[%s] criterion %2d: %s  (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

/// Best fitness of each of the 30 runs, keyed by function id.
std::vector<double> bests(const harness::ExperimentResults& r, const char* id)
{
    std::vector<double> out;
    for (const auto& run : r.find(id)->runs)
        out.push_back(run.summary.best_fitness);
    return out;
}

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }
double best(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

harness::ExperimentResults run_all()
{
    harness::ExperimentConfig c;
    c.suite = harness::SuiteSelection::custom;
    c.function_ids = {"fc01", "fc05", "fc08", "fc09", "fc10", "fc15", "fc16", "fc17", "h02", "h03", "h04", "h05"};
    c.runs = 30;
    c.base_seed = 0;
    c.trace_stride = 1000;
    return harness::run_experiment(c, false);
}

void stochastic_criteria()
{
    const auto r = run_all();

    {
        const auto v = bests(r, "fc01");
        report(1, mean(v) <= 1e-100, "Sphere fc01 30D mean <= 1e-100", "mean " + fmt("%.3e", mean(v)));
    }
    {
        const auto v = bests(r, "fc08");
        const auto zeros = std::count(v.begin(), v.end(), 0.0);
        report(2, mean(v) <= 1e-10 && zeros >= 25, "Rastrigin fc08 30D mean <= 1e-10 and exact 0 in >= 25/30 runs",
               "mean " + fmt("%.3e", mean(v)) + ", zeros " + std::to_string(zeros) + "/30");
    }
    {
        const auto v = bests(r, "fc09");
        report(3, mean(v) <= 1e-15, "Ackley fc09 30D mean <= 1e-15", "mean " + fmt("%.3e", mean(v)));
    }
    {
        const auto v = bests(r, "fc10");
        report(4, mean(v) <= 1e-10, "Griewank fc10 30D mean <= 1e-10", "mean " + fmt("%.3e", mean(v)));
    }
    {
        const auto v = bests(r, "fc05");
        report(5, best(v) <= 1e-3 && mean(v) <= 30.0, "Rosenbrock fc05 30D best <= 1e-3 and mean <= 30",
               "best " + fmt("%.4g", best(v)) + ", mean " + fmt("%.4g", mean(v)));
    }
    {
        const auto v = bests(r, "h02");
        const auto hits = std::count_if(v.begin(), v.end(), [](double x) { return x < 1e-2; });
        report(6, hits >= 27, "Damavandi >= 27/30 runs below 1e-2", std::to_string(hits) + "/30");
    }
    {
        const auto v = bests(r, "h04");
        report(7, best(v) <= -0.99, "XinSheYang03 30D best <= -0.99", "best " + fmt("%.6g", best(v)));
    }
    {
        const auto v = bests(r, "h05");
        report(8, best(v) <= -43.0 && mean(v) <= -42.0, "SineEnvelope 30D best <= -43.0 and mean <= -42.0",
               "best " + fmt("%.6g", best(v)) + ", mean " + fmt("%.6g", mean(v)));
    }
    {
        const auto v = bests(r, "h03");
        report(9, best(v) <= -0.9, "CrossLegTable best <= -0.9", "best " + fmt("%.6g", best(v)));
    }
    {
        const auto branin = bests(r, "fc16");
        const auto camel = bests(r, "fc15");
        const auto gp = bests(r, "fc17");
        const bool ok = std::abs(mean(branin) - 0.398) <= 1e-3 && best(camel) <= -1.0316 + 1e-3
                        && std::abs(best(gp) - 3.0) <= 1e-4;
        report(10, ok, "fixed-dimension at 10,000 FE: Branin, Six-Hump, Goldstein-Price",
               "Branin mean " + fmt("%.6f", mean(branin)) + ", Six-Hump best " + fmt("%.6f", best(camel))
                   + ", Goldstein-Price best " + fmt("%.8f", best(gp)));
    }
}

void property_criterion()
{
    std::vector<std::string> broken;
    const auto check = [&](bool ok, const std::string& name) {
        if (!ok)
            broken.push_back(name);
    };

    bool budget_ok = true, monotone_ok = true, inside_ok = true, identical_ok = true;
    for (const auto* f : testbed::all_functions()) {
        const Problem inner = testbed::make_problem(*f, std::nullopt, 1);
        std::size_t outside = 0, calls = 0;
        const Problem p(inner.name(), inner.bounds(), [&](std::span<const double> x) {
            ++calls;
            outside += !inner.contains(x);
            return inner.objective(x);
        });
        TsaConfig c;
        c.max_fe = 2011;
        const auto a = run(p, c, 21, TraceOptions{1, false});
        budget_ok &= a.summary.used_fe == c.max_fe && calls == c.max_fe;
        inside_ok &= outside == 0;
        for (std::size_t i = 1; i < a.trace.records.size(); ++i)
            monotone_ok &= a.trace.records[i].best_fitness <= a.trace.records[i - 1].best_fitness;

        const auto b = run(testbed::make_problem(*f, std::nullopt, 1), c, 21, TraceOptions{1, false});
        identical_ok &= a.trace.records.size() == b.trace.records.size();
        for (std::size_t i = 0; identical_ok && i < a.trace.records.size(); ++i)
            identical_ok &= a.trace.records[i].best_fitness == b.trace.records[i].best_fitness
                            && a.trace.records[i].used_fe == b.trace.records[i].used_fe;
    }
    check(budget_ok, "budget");
    check(monotone_ok, "monotone trace");
    check(inside_ok, "in-bounds evaluations");
    check(identical_ok, "identical traces");

    bool decay_ok = true;
    for (std::uint64_t t = 1; t < 100000; t += 7) {
        decay_ok &= schedule::intensify_magnitude(1.0, 3.0, 30, t + 1) < schedule::intensify_magnitude(1.0, 3.0, 30, t);
        decay_ok &= schedule::explore_magnitude(1.0, 3.0, t + 1) < schedule::explore_magnitude(1.0, 3.0, t);
    }
    check(decay_ok, "step decay");

    {
        const Problem p = testbed::make_problem(*testbed::find_function("fc01"));
        TsaConfig c;
        TsaState st(EvaluationBudget(10), RngStream(3));
        st.best = SearchAgent{random_solution(p, st.rng), 0.0, true};
        double hi = 0.0;
        for (int i = 0; i < 100000; ++i)
            hi = std::max(hi, std::tan(step1(st, p, c).theta));
        check(hi <= 13.34 + 1e-2, "tan bound");
    }

    {
        TsaConfig c;
        bool counts_ok = c.replace_count(30) == 6 && c.replace_count(2) == 1;
        for (std::size_t dim : {2u, 30u}) {
            const Problem p = testbed::make_problem(*testbed::find_function("fc01"), dim);
            TsaState st(EvaluationBudget(10), RngStream(5));
            st.best = SearchAgent{random_solution(p, st.rng), 0.0, true};
            for (int i = 0; i < 1000; ++i) {
                const auto m = propose_intensify(SearchAgent{random_solution(p, st.rng), 0.0, true}, st, p, c);
                std::size_t shared = 0;
                for (std::size_t k = 0; k < dim; ++k)
                    shared += m.position[k] == st.best.position[k];
                counts_ok &= m.replaced.size() == (dim == 30 ? 6u : 1u) && shared >= m.replaced.size();
            }
        }
        check(counts_ok, "overwrite counts");
    }

    std::string detail = "budget, monotone traces, in-bounds, determinism, decay, tan bound, overwrite counts";
    if (!broken.empty()) {
        detail = "broken:";
        for (const auto& b : broken)
            detail += " " + b;
    }
    report(11, broken.empty(), "engine property suite", detail);
}

double brute_force_wilcoxon_p(const std::vector<double>& a, const std::vector<double>& b)
{
    std::vector<double> d;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            d.push_back(std::abs(a[i] - b[i]) * (a[i] > b[i] ? 1 : -1));
    std::vector<double> mag;
    for (double x : d)
        mag.push_back(std::abs(x));
    const auto r = stats::midranks(mag);
    const double total = std::accumulate(r.begin(), r.end(), 0.0);
    double w = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > 0)
            w += r[i];
    const double obs = std::min(w, total - w);
    std::uint64_t hits = 0;
    const std::size_t n = d.size();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                s += r[i];
        hits += std::min(s, total - s) <= obs + 1e-9;
    }
    return static_cast<double>(hits) / static_cast<double>(1ULL << n);
}

void stats_criterion()
{
    RngStream rng(12);
    double worst = 0.0;
    for (int done = 0; done < 200;) {
        const std::size_t n = rng.uniform_index(5, 12);
        std::vector<double> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = std::round(rng.uniform(0, 8));
            b[i] = std::round(rng.uniform(0, 8));
        }
        const auto res = stats::wilcoxon_signed_rank({"a", a}, {"b", b});
        if (res.degenerate)
            continue;
        worst = std::max(worst, std::abs(res.p_value - brute_force_wilcoxon_p(a, b)));
        ++done;
    }
    const std::vector<stats::SampleSet> groups{{"a", {1, 2, 3}}, {"b", {4, 5, 6}}, {"c", {7, 8, 9}}};
    const double h = stats::kruskal_wallis(groups).statistic;
    const stats::SampleSet same{"s", {0.3, 1.5, 2.5, 9.0, 4.0, 1.0}};
    const auto ident = stats::wilcoxon_signed_rank(same, same);
    const bool ok = worst <= 1e-12 && std::abs(h - 7.2) <= 1e-12 && ident.p_value == 1.0 && !ident.reject;
    report(12, ok, "statistics oracles",
           "max |p - enumeration| " + fmt("%.2e", worst) + ", H " + fmt("%.15g", h) + ", identical p "
               + fmt("%g", ident.p_value));
}

void testbed_criterion()
{
    std::string bad;
    for (const auto* f : testbed::all_functions()) {
        if (!f->known_optimizer) {
            bad += " " + f->id + "(no optimizer)";
            continue;
        }
        const double v = testbed::eval_function(*f, *f->known_optimizer);
        if (!(std::abs(v - f->known_optimum_value) <= f->optimum_tolerance))
            bad += " " + f->id;
    }
    const double dama = testbed::eval_function(*testbed::find_function("h02"), std::vector<double>{2.0, 2.0});
    report(13, bad.empty() && dama == 0.0, "testbed optima within tolerance (25 functions), Damavandi(2,2) = 0",
           bad.empty() ? "all reproduced" : "mismatch:" + bad);
}

}  // namespace

int main()
{
    stochastic_criteria();
    property_criterion();
    stats_criterion();
    testbed_criterion();
    std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
