#include <benchmark/benchmark.h>

#include "hurwitz/hurwitz_count.hpp"
#include "hurwitz/perimeter.hpp"
#include "hurwitz/tree_stats.hpp"
#include "hurwitz/trivalent.hpp"

using namespace hurwitz;

namespace {

void BM_MonodromyParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_monodromy_tuples(1, Partition{2, 1, 1}));
}

void BM_MonodromySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_monodromy_tuples_serial(1, Partition{2, 1, 1}));
}

void BM_TrivalentParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trivalent(1, 2));
}

void BM_TrivalentSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trivalent_serial(1, 2));
}

void BM_TreesParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(observe_trees(n, 1000, 1));
  state.SetItemsProcessed(state.iterations() * 1000);
}

void BM_TreesSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(observe_trees_serial(n, 1000, 1));
  state.SetItemsProcessed(state.iterations() * 1000);
}

void BM_PerimeterParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(perimeter_laplace(1, 1, 1000, 1, 1));
}

void BM_PerimeterSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(perimeter_laplace_serial(1, 1, 1000, 1, 1));
}

}  // namespace

BENCHMARK(BM_MonodromyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonodromySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrivalentParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrivalentSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreesParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreesSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PerimeterParallel)->Iterations(1)->Unit(benchmark::kSecond);
BENCHMARK(BM_PerimeterSerial)->Iterations(1)->Unit(benchmark::kSecond);

BENCHMARK_MAIN();
