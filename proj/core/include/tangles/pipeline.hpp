#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tangles/cut.hpp"
#include "tangles/data.hpp"
#include "tangles/postprocess.hpp"
#include "tangles/search.hpp"

namespace tangles {

enum class Weighting { kUniform, kExponential };

struct ClusterOptions {
  std::size_t agreement = 1;
  std::size_t prune_depth = 1;
  std::optional<double> max_psi;
  Weighting weighting = Weighting::kUniform;
  double lambda = 1.0;
  unsigned threads = 1;
};

struct StageTimes {
  double cutgen = 0.0;
  double costing = 0.0;
  double tree = 0.0;
  double postprocess = 0.0;
};

struct ClusterResult {
  std::shared_ptr<const CutPool> pool;
  // Unpruned search tree.
  std::shared_ptr<const TangleSearchTree> tree;
  std::shared_ptr<const CondensedTree> condensed;
  SoftMatrix soft;
  std::vector<int> labels;
  StageTimes times;

  std::size_t tangle_count() const { return condensed->leaves().size(); }
};

WeightingFn make_weighting(Weighting weighting, double lambda, const CutPool& pool);

// Tree, post-processing and assignments for an already costed pool.
ClusterResult cluster_pool(CutPool pool, const ClusterOptions& options);

enum class CutSource { kColumns, kKernighanLin, kAxisSlices, kRandomProjection };

struct CutOptions {
  CutSource source = CutSource::kColumns;
  std::size_t count = 20;
  std::size_t kl_iterations = 2;
  // Spacing of axis slices; 0 means use the agreement parameter.
  std::size_t slice_spacing = 0;
  // Divide costs by |A| (n - |A|).
  bool normalize = false;
  std::uint64_t seed = 0;
};

// Column cuts scored by mean Hamming agreement.
ClusterResult cluster_answers(const BinaryMatrix& answers, const CutOptions& cuts,
                              const ClusterOptions& options);
// Kernighan-Lin cuts scored by cut weight.
ClusterResult cluster_graph(const Graph& graph, const CutOptions& cuts,
                            const ClusterOptions& options);
// Axis slices or random projections scored by exp-distance.
ClusterResult cluster_points(const PointCloud& points, const CutOptions& cuts,
                             const ClusterOptions& options);

const char* cut_source_name(CutSource source);
std::optional<CutSource> parse_cut_source(const std::string& name);

}  // namespace tangles
