// Serial against OpenMP Monte Carlo kernels. Both produce identical draws.

#include <benchmark/benchmark.h>

#include "tsecon/montecarlo.hpp"

using namespace tsecon;

namespace {

void BM_DickeyFullerSerial(benchmark::State& state) {
    const int reps = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mc::df_tau_draws_serial(DetCase::constant, 500, reps, 1));
    state.SetItemsProcessed(state.iterations() * reps);
}

void BM_DickeyFullerParallel(benchmark::State& state) {
    const int reps = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mc::df_tau_draws(DetCase::constant, 500, reps, 1));
    state.SetItemsProcessed(state.iterations() * reps);
    state.counters["threads"] = mc::max_threads();
}

void BM_JohansenSerial(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::johansen_null_draws_serial(JohansenCase::unrestricted_constant, dim, 400, 2000, 1));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}

void BM_JohansenParallel(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::johansen_null_draws(JohansenCase::unrestricted_constant, dim, 400, 2000, 1));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
    state.counters["threads"] = mc::max_threads();
}

}  // namespace

BENCHMARK(BM_DickeyFullerSerial)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DickeyFullerParallel)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JohansenSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JohansenParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
