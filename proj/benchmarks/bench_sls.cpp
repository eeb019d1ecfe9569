#include <benchmark/benchmark.h>

#include "dnacodex/sls.hpp"

using namespace dnacodex;

namespace {

void BM_SlsStep(benchmark::State& state) {
  // Steady-state move cost with a full-size library.
  SlsParams params{CodeParams(6, 4, 3), 16};
  params.seed = 3;
  SlsEngine engine(params);
  while (!engine.done()) engine.step();
  for (auto _ : state) benchmark::DoNotOptimize(engine.step().cost);
}
BENCHMARK(BM_SlsStep);

void BM_SlsRun432(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SlsParams params{CodeParams(4, 3, 2), 6};
    params.max_stagnation = 100'000;
    params.seed = seed++;
    benchmark::DoNotOptimize(run(params).code.size());
  }
}
BENCHMARK(BM_SlsRun432)->Unit(benchmark::kMillisecond);

void BM_SlsRun643(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SlsParams params{CodeParams(6, 4, 3), 16};
    params.max_stagnation = 100'000;
    params.seed = seed++;
    benchmark::DoNotOptimize(run(params).code.size());
  }
}
BENCHMARK(BM_SlsRun643)->Unit(benchmark::kMillisecond);

}  // namespace
