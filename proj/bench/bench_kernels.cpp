// Serial reference kernels vs. their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <vector>

#include "gli/gli_core.hpp"
#include "gli/strategy_eval.hpp"

namespace {

const gli::GameParams kWorkedExample{7.0, 10.0, 13.0};

void BM_Mp2Serial(benchmark::State& state) {
  const double resolution = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gli::mp2_solve_serial(kWorkedExample, resolution));
}
BENCHMARK(BM_Mp2Serial)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Mp2Parallel(benchmark::State& state) {
  const double resolution = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gli::mp2_solve(kWorkedExample, resolution));
}
BENCHMARK(BM_Mp2Parallel)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

std::vector<gli::GameParams> batch(std::size_t n) {
  gli::Rng rng(7);
  std::vector<gli::GameParams> out(n);
  for (auto& p : out)
    p = {20.0 * gli::uniform01(rng), 20.0 * gli::uniform01(rng), 30.0 * gli::uniform01(rng) + 0.1};
  return out;
}

void BM_VerifyBatchSerial(benchmark::State& state) {
  const auto instances = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gli::verify_batch_serial(instances, 4e-3));
}
BENCHMARK(BM_VerifyBatchSerial)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_VerifyBatchParallel(benchmark::State& state) {
  const auto instances = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gli::verify_batch(instances, 4e-3));
}
BENCHMARK(BM_VerifyBatchParallel)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
