#include <benchmark/benchmark.h>

#include "japprox/corpus.hpp"
#include "japprox/moduli.hpp"

using namespace japprox;

namespace {

const TestFunction& runge()
{
    static const Corpus corpus = builtin_corpus();
    return corpus.find("runge");
}

void BM_modulus_parallel(benchmark::State& state)
{
    const ModulusGrid grid{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(modulus(runge(), 4, 0.2, grid).value);
    }
}

void BM_modulus_serial(benchmark::State& state)
{
    const ModulusGrid grid{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(modulus_serial(runge(), 4, 0.2, grid).value);
    }
}

void BM_grid_sup_parallel(benchmark::State& state)
{
    const RealFn f = runge().evaluator;
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_sup(f, unit_interval(), n).value);
    }
}

void BM_grid_sup_serial(benchmark::State& state)
{
    const RealFn f = runge().evaluator;
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_sup_serial(f, unit_interval(), n).value);
    }
}

} // namespace

BENCHMARK(BM_modulus_parallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_modulus_serial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grid_sup_parallel)->Arg(4096)->Arg(65536)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_grid_sup_serial)->Arg(4096)->Arg(65536)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
