// Serial reference vs OpenMP kernel for the enumeration oracle, and the
// classifier with and without its parallel loop.

#include <benchmark/benchmark.h>

#include "ordclass/analysis.hpp"

namespace {

using namespace ordclass;

const GroupSpec& bench_group()
{
    // |G| = 8 * 2 * 27 * 25 * 7 = 756000
    static const GroupSpec g = parse_group_spec("QxC2xC27xC25xC7");
    return g;
}

void BM_BruteForceSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_order_counts_serial(bench_group()));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * bench_group().order()));
}
BENCHMARK(BM_BruteForceSerial)->Unit(benchmark::kMillisecond);

void BM_BruteForceParallel(benchmark::State& state)
{
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_order_counts(bench_group(), kDefaultBruteForceCap, threads));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * bench_group().order()));
}
BENCHMARK(BM_BruteForceParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state)
{
    ClassifyOptions opts;
    opts.parallel = state.range(0) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_poc_hamiltonian(5000, opts));
}
BENCHMARK(BM_Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
