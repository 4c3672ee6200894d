// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "tx/pool.hpp"

namespace {

void BM_ProductPoolSerial(benchmark::State& st) {
    auto base = tx::base_pool(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(tx::product_pool_serial(base, 3));
}

void BM_ProductPoolParallel(benchmark::State& st) {
    auto base = tx::base_pool(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(tx::product_pool(base, 3, true));
}

void BM_AnalyzePoolSerial(benchmark::State& st) {
    auto pool = tx::product_pool(tx::base_pool(static_cast<int>(st.range(0))), 3);
    for (auto _ : st) benchmark::DoNotOptimize(tx::analyze_pool_serial(pool));
    st.counters["elements"] = static_cast<double>(pool.size());
}

void BM_AnalyzePoolParallel(benchmark::State& st) {
    auto pool = tx::product_pool(tx::base_pool(static_cast<int>(st.range(0))), 3);
    for (auto _ : st) benchmark::DoNotOptimize(tx::analyze_pool(pool, true));
    st.counters["elements"] = static_cast<double>(pool.size());
    st.counters["threads"] = tx::pool_threads();
}

}  // namespace

BENCHMARK(BM_ProductPoolSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ProductPoolParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AnalyzePoolSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AnalyzePoolParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
