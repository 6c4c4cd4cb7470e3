#include "dtn/steklov.hpp"
#include "dtn/trace.hpp"

#include <benchmark/benchmark.h>

using namespace dtn;

static void BM_MetricInverse(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto jets = build_gauge_jets(Scenario::random_gauge(1), n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(jet_invert_metric(jets.g, n));
}
BENCHMARK(BM_MetricInverse)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_JetMultiply(benchmark::State& state) {
    auto jets = build_gauge_jets(Scenario::random_gauge(1), static_cast<int>(state.range(0)), 3);
    const auto& a = jets.metric(1, 1);
    const auto& b = jets.metric(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_JetMultiply)->Arg(4)->Arg(6);

static void BM_EngineSymbolic(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int k = static_cast<int>(state.range(1));
    auto jets = build_gauge_jets(Scenario::random_gauge(1), n, std::max(k, 1));
    for (auto _ : state) benchmark::DoNotOptimize(engine_coefficient(jets, k));
}
BENCHMARK(BM_EngineSymbolic)->Args({6, 1})->Args({4, 2})->Args({6, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_EngineSubstituted(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto sym = build_gauge_jets(Scenario::random_gauge(1), n, 3);
    auto jets = substitute(sym, verification_assignment(sym, 1));
    for (auto _ : state) benchmark::DoNotOptimize(engine_coefficient(jets, 3));
}
BENCHMARK(BM_EngineSubstituted)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Moment(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(moment(6, -2, {2, 2, 0, 1, 1}));
}
BENCHMARK(BM_Moment);

static void BM_ModeEigenvalue(benchmark::State& state) {
    RadialProblem p{ModelGeometry::Ball, {0, 0, make_rational(1, 2)}, {make_rational(1, 3)}};
    int mode = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mode_eigenvalue(p, mode));
}
BENCHMARK(BM_ModeEigenvalue)->Arg(5)->Arg(50)->Arg(500)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
