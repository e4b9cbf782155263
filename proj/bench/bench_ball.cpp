#include <benchmark/benchmark.h>

#include "artin/ball.hpp"
#include "artin/defining_graph.hpp"

namespace {

const artin::DefiningGraph& graph(int which) {
  static const artin::DefiningGraph graphs[] = {
      artin::parse_graph("vertices: a b c d\nedges: a-b:2 b-c:2 c-d:2"),
      artin::parse_graph("vertices: a b c d e\nedges: a-b:2 b-c:2 c-d:2 d-e:2 e-a:2"),
      artin::parse_graph("vertices: a b c d\nedges: a-b:2 b-c:2 a-c:2 c-d:2"),
  };
  return graphs[which];
}

void BM_serial(benchmark::State& state) {
  const auto& g = graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(artin::build_ball_serial(g, state.range(1)));
}

void BM_parallel(benchmark::State& state) {
  const auto& g = graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(artin::build_ball(g, state.range(1)));
}

// graph index: 0 = P4, 1 = C5, 2 = triangle with a pendant edge
BENCHMARK(BM_serial)->ArgsProduct({{0, 1, 2}, {4, 6, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->ArgsProduct({{0, 1, 2}, {4, 6, 8}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
