#include "tangles/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "tangles/costs.hpp"
#include "tangles/cutgen.hpp"
#include "tangles/error.hpp"

namespace tangles {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CostFn with_normalization(CostFn raw, bool normalize) {
  if (!normalize) return raw;
  return [raw = std::move(raw)](const Bipartition& cut) { return normalize_cost(raw(cut), cut); };
}

ClusterResult cost_and_cluster(const CutPool& uncosted, const CostFn& cost, double cutgen_time,
                               const ClusterOptions& options) {
  const auto start = Clock::now();
  CutPool costed = assign_costs(uncosted, cost, options.threads);
  const double costing_time = seconds_since(start);
  ClusterResult result = cluster_pool(std::move(costed), options);
  result.times.cutgen = cutgen_time;
  result.times.costing = costing_time;
  return result;
}

}  // namespace

WeightingFn make_weighting(Weighting weighting, double lambda, const CutPool& pool) {
  if (weighting == Weighting::kUniform) return WeightingFn::uniform();
  return WeightingFn::exponential(lambda, pool.empty() ? 0.0 : pool[0].cost);
}

ClusterResult cluster_pool(CutPool pool, const ClusterOptions& options) {
  ClusterResult result;
  result.pool = std::make_shared<const CutPool>(std::move(pool));

  auto start = Clock::now();
  result.tree = std::make_shared<const TangleSearchTree>(
      build_tree(result.pool, options.agreement, BuildOptions{options.max_psi, options.threads}));
  result.times.tree = seconds_since(start);

  start = Clock::now();
  const WeightingFn h = make_weighting(options.weighting, options.lambda, *result.pool);
  result.condensed =
      std::make_shared<const CondensedTree>(postprocess(*result.tree, options.prune_depth, h));
  result.soft = soft_assignments(*result.condensed);
  result.labels = hard_assignments(result.soft);
  result.times.postprocess = seconds_since(start);
  return result;
}

ClusterResult cluster_answers(const BinaryMatrix& answers, const CutOptions& cuts,
                              const ClusterOptions& options) {
  if (cuts.source != CutSource::kColumns) {
    throw Error(ErrorCode::kBadParams, "binary matrices only support column cuts");
  }
  const auto start = Clock::now();
  const CutPool pool = column_cuts(answers);
  const double cutgen_time = seconds_since(start);
  CostFn cost = [&answers](const Bipartition& cut) { return mean_hamming_cost(cut, answers); };
  return cost_and_cluster(pool, with_normalization(std::move(cost), cuts.normalize), cutgen_time,
                          options);
}

ClusterResult cluster_graph(const Graph& graph, const CutOptions& cuts,
                            const ClusterOptions& options) {
  if (cuts.source != CutSource::kKernighanLin) {
    throw Error(ErrorCode::kBadParams, "graphs only support Kernighan-Lin cuts");
  }
  const auto start = Clock::now();
  const CutPool pool = kl_cuts(graph, cuts.count, cuts.kl_iterations, cuts.seed, options.threads);
  const double cutgen_time = seconds_since(start);
  CostFn cost = [&graph](const Bipartition& cut) { return graph_cut_cost(cut, graph); };
  return cost_and_cluster(pool, with_normalization(std::move(cost), cuts.normalize), cutgen_time,
                          options);
}

ClusterResult cluster_points(const PointCloud& points, const CutOptions& cuts,
                             const ClusterOptions& options) {
  const auto start = Clock::now();
  CutPool pool;
  if (cuts.source == CutSource::kAxisSlices) {
    const std::size_t spacing = cuts.slice_spacing != 0 ? cuts.slice_spacing : options.agreement;
    pool = axis_slices(points, std::max<std::size_t>(spacing, 2));
  } else if (cuts.source == CutSource::kRandomProjection) {
    pool = random_projection_cuts(points, cuts.count, cuts.seed, options.threads);
  } else {
    throw Error(ErrorCode::kBadParams, "point clouds support axis slices or random projections");
  }
  const double cutgen_time = seconds_since(start);
  CostFn cost = [&points](const Bipartition& cut) { return exp_distance_cost(cut, points); };
  return cost_and_cluster(pool, with_normalization(std::move(cost), cuts.normalize), cutgen_time,
                          options);
}

const char* cut_source_name(CutSource source) {
  switch (source) {
    case CutSource::kColumns: return "columns";
    case CutSource::kKernighanLin: return "kl";
    case CutSource::kAxisSlices: return "axis";
    case CutSource::kRandomProjection: return "projection";
  }
  return "?";
}

std::optional<CutSource> parse_cut_source(const std::string& name) {
  for (CutSource s : {CutSource::kColumns, CutSource::kKernighanLin, CutSource::kAxisSlices,
                      CutSource::kRandomProjection}) {
    if (name == cut_source_name(s)) return s;
  }
  return std::nullopt;
}

}  // namespace tangles
