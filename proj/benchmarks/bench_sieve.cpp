#include <benchmark/benchmark.h>

#include "fqexcess/bruteforce.hpp"
#include "fqexcess/irreducibles.hpp"

using namespace fqexcess;

static void BM_irreducible_sieve(benchmark::State& state) {
    FieldSpec f = field_from_order((std::uint64_t)state.range(0));
    unsigned D = (unsigned)state.range(1);
    for (auto _ : state) {
        IrreducibleStore irr = IrreducibleStore::sieve(f, D);
        benchmark::DoNotOptimize(irr.spf(f.q()));
    }
}
BENCHMARK(BM_irreducible_sieve)
    ->Args({2, 16})
    ->Args({3, 10})
    ->Args({5, 7})
    ->Unit(benchmark::kMillisecond);

static void BM_count_squarefree(benchmark::State& state) {
    std::uint64_t q = (std::uint64_t)state.range(0);
    unsigned n = (unsigned)state.range(1);
    FieldSpec f = field_from_order(q);
    IrreducibleStore irr = IrreducibleStore::sieve(f, (n / 2) ? n / 2 : 1);
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    for (auto _ : state)
        benchmark::DoNotOptimize(count_squarefree(f, n, irr));
    state.SetItemsProcessed(state.iterations() * (std::int64_t)qn);
}
BENCHMARK(BM_count_squarefree)
    ->Args({2, 18})
    ->Args({3, 11})
    ->Args({4, 9})
    ->Unit(benchmark::kMillisecond);
