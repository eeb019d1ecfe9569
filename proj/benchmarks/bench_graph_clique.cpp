#include <benchmark/benchmark.h>

#include "dnacodex/clique.hpp"
#include "dnacodex/conflict_graph.hpp"

using namespace dnacodex;

namespace {

void BM_BuildGraph(benchmark::State& state) {
  for (auto _ : state) {
    const ConflictGraph g = build_conflict_graph(GraphKind::GcRc, CodeParams(6, 4, 3));
    benchmark::DoNotOptimize(g.adj.edge_count());
  }
}
BENCHMARK(BM_BuildGraph)->Unit(benchmark::kMillisecond);

void BM_MaxClique542(benchmark::State& state) {
  const ConflictGraph g = build_conflict_graph(GraphKind::GcRc, CodeParams(5, 4, 2));
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(g).size);
}
BENCHMARK(BM_MaxClique542)->Unit(benchmark::kMillisecond);

void BM_MaxClique532(benchmark::State& state) {
  const ConflictGraph g = build_conflict_graph(GraphKind::GcRc, CodeParams(5, 3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(g).size);
}
BENCHMARK(BM_MaxClique532)->Unit(benchmark::kMillisecond);

void BM_CountMaxCliques542(benchmark::State& state) {
  const ConflictGraph g = build_conflict_graph(GraphKind::GcRc, CodeParams(5, 4, 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_max_cliques(g.adj, 3).count);
}
BENCHMARK(BM_CountMaxCliques542)->Unit(benchmark::kMillisecond);

}  // namespace
