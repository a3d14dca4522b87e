#include <benchmark/benchmark.h>

#include "fqexcess/bruteforce.hpp"

using namespace fqexcess;

static void BM_enumerate_excess(benchmark::State& state) {
    std::uint64_t q = (std::uint64_t)state.range(0);
    unsigned n = (unsigned)state.range(1);
    FieldSpec f = field_from_order(q);
    IrreducibleStore irr = IrreducibleStore::sieve(f, n);
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_excess(f, n, irr, 1, qn));
    state.SetItemsProcessed(state.iterations() * (std::int64_t)qn);
}
BENCHMARK(BM_enumerate_excess)
    ->Args({2, 16})
    ->Args({3, 10})
    ->Args({4, 8})
    ->Args({5, 7})
    ->Unit(benchmark::kMillisecond);

static void BM_verify_counts(benchmark::State& state) {
    std::uint64_t q = (std::uint64_t)state.range(0);
    unsigned n = (unsigned)state.range(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_counts(q, n, n, 1));
    state.SetLabel("all degrees up to n");
}
BENCHMARK(BM_verify_counts)->Args({2, 14})->Args({3, 9})->Unit(
    benchmark::kMillisecond);
