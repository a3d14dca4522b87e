#include <benchmark/benchmark.h>

#include "fqexcess/densities.hpp"
#include "fqexcess/integers.hpp"

using namespace fqexcess;

static void BM_density_enclosures(benchmark::State& state) {
    std::uint64_t q = (std::uint64_t)state.range(0);
    unsigned K = (unsigned)state.range(1);
    for (auto _ : state) {
        DensityReport rep = density_enclosures(q, K, 1e-10);
        benchmark::DoNotOptimize(rep.d.back().width());
    }
}
BENCHMARK(BM_density_enclosures)
    ->Args({2, 10})
    ->Args({2, 30})
    ->Args({3, 20})
    ->Unit(benchmark::kMillisecond);

static void BM_dnk_table(benchmark::State& state) {
    unsigned N = (unsigned)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(dnk_table(2, N, 6));
}
BENCHMARK(BM_dnk_table)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_renyi_density(benchmark::State& state) {
    std::uint32_t P = (std::uint32_t)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(renyi_density(10, P, 1e-3).back().width());
}
BENCHMARK(BM_renyi_density)->Arg(10000)->Arg(100000)->Unit(
    benchmark::kMillisecond);

static void BM_int_excess_counts(benchmark::State& state) {
    std::uint64_t N = (std::uint64_t)state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(int_excess_counts(N, 10, 1).counts[0]);
    state.SetItemsProcessed(state.iterations() * (std::int64_t)N);
}
BENCHMARK(BM_int_excess_counts)->Arg(100000)->Arg(1000000)->Unit(
    benchmark::kMillisecond);
