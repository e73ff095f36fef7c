#include <benchmark/benchmark.h>

#include "tangles/costs.hpp"
#include "tangles/cutgen.hpp"
#include "tangles/models.hpp"

namespace {

using namespace tangles;

void BM_MeanHammingCost(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = gen_mindsets(n, 40, 3, 0.1, 2);
  const CutPool pool = column_cuts(inst.answers);
  for (auto _ : state) {
    double total = 0.0;
    for (const Bipartition& cut : pool) total += mean_hamming_cost(cut, inst.answers);
    benchmark::DoNotOptimize(total);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MeanHammingCost)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_GraphCutCost(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = gen_sbm(n, 2, 0.3, 0.05, 3, false);
  const CutPool pool = kl_cuts(inst.graph, 10, 1, 4);
  for (auto _ : state) {
    double total = 0.0;
    for (const Bipartition& cut : pool) total += graph_cut_cost(cut, inst.graph);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_GraphCutCost)->Arg(200)->Arg(800);

void BM_ExpDistanceCost(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = gen_gmm({0, 0, 6, 0, 0, 6, 6, 6}, 2, 1.0, n, 5);
  const CutPool pool = axis_slices(inst.points, n / 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp_distance_cost(pool[0], inst.points));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpDistanceCost)->RangeMultiplier(2)->Range(500, 4000)->Complexity();

void BM_KlRefine(benchmark::State& state) {
  const auto inst = gen_sbm(static_cast<std::size_t>(state.range(0)), 2, 0.3, 0.05, 7, false);
  BitVec start(inst.graph.num_nodes());
  for (std::size_t v = 0; v < start.size(); v += 2) start.set(v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kl_refine(inst.graph, start, 2).side.count());
  }
}
BENCHMARK(BM_KlRefine)->Arg(100)->Arg(400);

}  // namespace
