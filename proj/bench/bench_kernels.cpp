// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "latbb/bounds.hpp"
#include "latbb/harness.hpp"

using namespace latbb;

static void BM_BallCountSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(count_ball_points_sq_serial(st.range(0), st.range(1)));
}
static void BM_BallCountParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(count_ball_points_sq(st.range(0), st.range(1)));
}
BENCHMARK(BM_BallCountSerial)->Args({30, 150})->Args({70, 900})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallCountParallel)->Args({30, 150})->Args({70, 900})->Unit(benchmark::kMillisecond);

static GeneratorSpec bench_spec() {
  GeneratorSpec g;
  g.family = Family::UniformBox;
  g.m = 6;
  g.n = 14;
  g.M = 40;
  g.count = 8;
  g.seed = 11;
  return g;
}

static void BM_ExperimentSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(run_experiment_serial(bench_spec(), Pipeline{}).summary.records);
}
static void BM_ExperimentParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(run_experiment(bench_spec(), Pipeline{}).summary.records);
}
BENCHMARK(BM_ExperimentSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
