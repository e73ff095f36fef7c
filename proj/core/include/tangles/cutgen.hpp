#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tangles/bitvec.hpp"
#include "tangles/cut.hpp"
#include "tangles/data.hpp"

namespace tangles {

// One cut per column, with id = column index. Constant columns are skipped
// with a warning. Costs are zero until assigned.
CutPool column_cuts(const BinaryMatrix& answers);

struct KlPass {
  // Gains of the committed swaps, in order.
  std::vector<double> gains;
  double cut_before = 0.0;
  double cut_after = 0.0;
};

struct KlResult {
  BitVec side;
  std::vector<KlPass> passes;
};

// Runs up to `iterations` Kernighan-Lin passes from `start`. Each pass swaps
// unlocked pairs greedily by gain D_a + D_b - 2 w(a, b), then commits the
// prefix with the largest positive cumulative gain; a pass without one ends
// the search.
KlResult kl_refine(const Graph& graph, BitVec start, std::size_t iterations);

// `count` restarts of kl_refine from random splits with |A| = floor(n / 2),
// restart i seeded by derive_seed(seed, i). Identical results are merged, so
// the pool can hold fewer than `count` cuts. Throws kTooFewNodes when n < 2.
CutPool kl_cuts(const Graph& graph, std::size_t count, std::size_t iterations,
                std::uint64_t seed, unsigned threads = 1);

// Per axis: sort points by (coordinate, index) and cut after 1 point, then
// keep moving the cut a - 1 points further while at least a points lie above
// it. Thresholds are midpoints
// between neighbouring coordinates. Constant axes are skipped with a
// kDegenerateAxis warning. Requires a >= 2.
CutPool axis_slices(const PointCloud& points, std::size_t a);

// Per cut: project on a uniformly random unit direction and split by the
// exact 1-D 2-means optimum. Identical projections fall back to a split after
// the first sorted point.
CutPool random_projection_cuts(const PointCloud& points, std::size_t count,
                               std::uint64_t seed, unsigned threads = 1);

}  // namespace tangles
