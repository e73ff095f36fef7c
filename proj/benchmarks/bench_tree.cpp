#include <benchmark/benchmark.h>

#include "tangles/cutgen.hpp"
#include "tangles/costs.hpp"
#include "tangles/models.hpp"
#include "tangles/postprocess.hpp"
#include "tangles/search.hpp"

namespace {

using namespace tangles;

CutPool question_pool(std::size_t n, std::size_t m) {
  const auto inst = gen_mindsets(n, m, 3, 0.1, 1);
  return assign_costs(column_cuts(inst.answers), [](const Bipartition& c) { return c.id; });
}

// Tree stage only, m = 40 questions, growing n.
void BM_BuildTreeObjects(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CutPool pool = question_pool(n, 40);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_tree(pool, n / 9).size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTreeObjects)->RangeMultiplier(2)->Range(5000, 40000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_BuildTreeCuts(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const CutPool pool = question_pool(2000, m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_tree(pool, 2000 / 9).size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTreeCuts)->RangeMultiplier(2)->Range(10, 160)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Postprocess(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CutPool pool = question_pool(n, 40);
  const TangleSearchTree tree = build_tree(pool, n / 9);
  for (auto _ : state) {
    const CondensedTree condensed = postprocess(tree, 1, WeightingFn::uniform());
    benchmark::DoNotOptimize(soft_assignments(condensed).values.data());
  }
}
BENCHMARK(BM_Postprocess)->Arg(1000)->Arg(8000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
