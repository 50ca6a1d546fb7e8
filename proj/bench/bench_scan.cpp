// Parallel run_scan against the serial reference on the figure sweeps.

#include <benchmark/benchmark.h>

#include "kgscatter/scan.hpp"

namespace {

kgscatter::ScanSpec figure(int index) { return kgscatter::figure_sweeps().at(index).spec; }

void BM_serial(benchmark::State& state) {
  const auto spec = figure(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kgscatter::serial::run_scan(spec));
}

void BM_parallel(benchmark::State& state) {
  const auto spec = figure(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kgscatter::run_scan(spec));
}

void BM_oracle_serial(benchmark::State& state) {
  auto spec = figure(0);
  spec.engine = kgscatter::Engine::oracle;
  spec.range.step = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(kgscatter::serial::run_scan(spec));
}

void BM_oracle_parallel(benchmark::State& state) {
  auto spec = figure(0);
  spec.engine = kgscatter::Engine::oracle;
  spec.range.step = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(kgscatter::run_scan(spec));
}

}  // namespace

BENCHMARK(BM_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_oracle_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
