#include <benchmark/benchmark.h>

#include <vector>

#include "dnacodex/sequence.hpp"

using namespace dnacodex;

namespace {

std::vector<Sequence> random_batch(int n, std::size_t count) {
  Rng rng(1);
  std::vector<Sequence> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(sample_constant_gc(n, n / 2, rng));
  return out;
}

void BM_Hamming(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto batch = random_batch(n, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamming(batch[i & 1023], batch[(i + 7) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_Hamming)->Arg(8)->Arg(16)->Arg(32);

void BM_ReverseComplement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto batch = random_batch(n, 1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reverse_complement(batch[i & 1023]));
    ++i;
  }
}
BENCHMARK(BM_ReverseComplement)->Arg(8)->Arg(32);

void BM_SampleAdmissible(benchmark::State& state) {
  Rng rng(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_admissible(10, 5, 5, rng));
}
BENCHMARK(BM_SampleAdmissible);

void BM_EnumerateConstantGc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t total = 0;
    for_each_constant_gc(n, n / 2, [&total](const Sequence&) { ++total; });
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateConstantGc)->Arg(5)->Arg(7);

}  // namespace
