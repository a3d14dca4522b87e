#include <benchmark/benchmark.h>

#include "fqexcess/field.hpp"

using namespace fqexcess;

static void BM_field_mul_tabled(benchmark::State& state) {
    FieldSpec f(2, (unsigned)state.range(0));
    Elem acc = 1;
    for (auto _ : state) {
        for (Elem a = 1; a < f.q(); ++a) acc = f.mul(acc, a);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (f.q() - 1));
}
BENCHMARK(BM_field_mul_tabled)->Arg(3)->Arg(6)->Arg(10);

static void BM_field_mul_table_free(benchmark::State& state) {
    // table_bound 1 forces polynomial arithmetic
    FieldSpec f(2, (unsigned)state.range(0), std::uint64_t(1));
    Elem acc = 1;
    for (auto _ : state) {
        for (Elem a = 1; a < f.q(); ++a) acc = f.mul(acc, a);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (f.q() - 1));
}
BENCHMARK(BM_field_mul_table_free)->Arg(3)->Arg(6)->Arg(10);

static void BM_field_inv(benchmark::State& state) {
    FieldSpec f(5, 2);
    Elem acc = 1;
    for (auto _ : state) {
        for (Elem a = 1; a < f.q(); ++a) acc = f.inv(a);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (f.q() - 1));
}
BENCHMARK(BM_field_inv);

BENCHMARK_MAIN();
