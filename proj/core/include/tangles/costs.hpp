#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "tangles/cut.hpp"
#include "tangles/data.hpp"

namespace tangles {

// Number of coordinates on which u and v agree. Throws kLengthMismatch.
std::size_t hamming_agreement(std::span<const std::uint8_t> u,
                              std::span<const std::uint8_t> v);

using Similarity = std::function<double(std::size_t, std::size_t)>;

// Mean of sim(u, v) over all u in A, v in A^c, evaluated pair by pair.
double mean_similarity_cost(const Bipartition& cut, const Similarity& sim);

// Same value as mean_similarity_cost with sim = hamming_agreement on the rows
// of answers, computed from per-column side counts in O(n * m):
// sum over columns of (ones_A * ones_B + zeros_A * zeros_B) / (|A| |B|).
double mean_hamming_cost(const Bipartition& cut, const BinaryMatrix& answers);

// Total weight of edges crossing the cut. Throws kUniverseMismatch.
double graph_cut_cost(const Bipartition& cut, const Graph& graph);

// sum over u in A, v in A^c of exp(-|u - v|_2). Throws kUniverseMismatch.
double exp_distance_cost(const Bipartition& cut, const PointCloud& points);

// raw / (|A| * (n - |A|)).
double normalize_cost(double raw, const Bipartition& cut);

using CostFn = std::function<double(const Bipartition&)>;

// Evaluates cost(cut) for every cut (concurrently when threads > 1) and
// returns the pool re-sorted by (cost, id).
CutPool assign_costs(const CutPool& pool, const CostFn& cost, unsigned threads = 1);

}  // namespace tangles
