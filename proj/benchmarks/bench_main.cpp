#include <benchmark/benchmark.h>

#include <vector>

#include "tsa/engine.hpp"
#include "tsa/stats.hpp"
#include "tsa/testbed.hpp"

namespace {

void BM_Evaluate(benchmark::State& state, const char* id)
{
    const auto& f = *tsa::testbed::find_function(id);
    tsa::RngStream rng(1);
    const auto p = tsa::testbed::make_problem(f);
    const auto x = tsa::random_solution(p, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(p.objective(x));
}
BENCHMARK_CAPTURE(BM_Evaluate, sphere, "fc01");
BENCHMARK_CAPTURE(BM_Evaluate, ackley, "fc09");
BENCHMARK_CAPTURE(BM_Evaluate, foxholes, "fc13");
BENCHMARK_CAPTURE(BM_Evaluate, sine_envelope, "h05");

void BM_Iteration(benchmark::State& state)
{
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto p = tsa::testbed::make_problem(*tsa::testbed::find_function("fc01"), dim);
    tsa::TsaConfig c;
    c.max_fe = std::uint64_t{1} << 40;
    auto st = tsa::initialize(p, c, tsa::RngStream(3));
    for (auto _ : state)
        tsa::tsa_iteration(st, p, c);
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.pop_size));
}
BENCHMARK(BM_Iteration)->Arg(2)->Arg(30)->Arg(100);

void BM_Run(benchmark::State& state)
{
    const auto p = tsa::testbed::make_problem(*tsa::testbed::find_function("fc08"));
    tsa::TsaConfig c;
    c.max_fe = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(tsa::run(p, c, seed++).summary.best_fitness);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Run)->Arg(5000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_WilcoxonExact(benchmark::State& state)
{
    tsa::RngStream rng(4);
    const auto n = static_cast<std::size_t>(state.range(0));
    tsa::stats::SampleSet a{"a", {}}, b{"b", {}};
    for (std::size_t i = 0; i < n; ++i) {
        a.values.push_back(rng.uniform());
        b.values.push_back(rng.uniform());
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(tsa::stats::wilcoxon_signed_rank(a, b).p_value);
}
BENCHMARK(BM_WilcoxonExact)->Arg(12)->Arg(20)->Arg(30);

void BM_KruskalWallis(benchmark::State& state)
{
    tsa::RngStream rng(5);
    std::vector<tsa::stats::SampleSet> groups(5);
    for (auto& g : groups)
        for (int i = 0; i < 30; ++i)
            g.values.push_back(rng.uniform());
    for (auto _ : state)
        benchmark::DoNotOptimize(tsa::stats::kruskal_wallis(groups).p_value);
}
BENCHMARK(BM_KruskalWallis);

}  // namespace

BENCHMARK_MAIN();
