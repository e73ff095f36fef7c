#include "tangles/costs.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "tangles/error.hpp"
#include "tangles/parallel.hpp"

namespace tangles {

namespace {

void require_universe(const Bipartition& cut, std::size_t n, const char* what) {
  if (cut.universe_size() != n) {
    throw Error(ErrorCode::kUniverseMismatch,
                std::string(what) + " has " + std::to_string(n) + " objects, cut " +
                    std::to_string(cut.id) + " spans " + std::to_string(cut.universe_size()));
  }
}

}  // namespace

std::size_t hamming_agreement(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kLengthMismatch, "answer vectors of length " +
                                                std::to_string(u.size()) + " and " +
                                                std::to_string(v.size()));
  }
  std::size_t agree = 0;
  for (std::size_t i = 0; i < u.size(); ++i) agree += (u[i] == v[i]) ? 1 : 0;
  return agree;
}

double mean_similarity_cost(const Bipartition& cut, const Similarity& sim) {
  const std::vector<std::size_t> side_a = cut.side_a.indices();
  const std::vector<std::size_t> side_b = cut.side_a.complement().indices();
  double total = 0.0;
  for (std::size_t u : side_a) {
    for (std::size_t v : side_b) total += sim(u, v);
  }
  return total / (static_cast<double>(side_a.size()) * static_cast<double>(side_b.size()));
}

double mean_hamming_cost(const Bipartition& cut, const BinaryMatrix& answers) {
  require_universe(cut, answers.rows(), "answer matrix");
  const std::size_t m = answers.cols();
  std::vector<std::size_t> ones_a(m, 0);
  std::vector<std::size_t> ones_b(m, 0);
  for (std::size_t r = 0; r < answers.rows(); ++r) {
    auto& ones = cut.side_a.test(r) ? ones_a : ones_b;
    const auto row = answers.row(r);
    for (std::size_t c = 0; c < m; ++c) ones[c] += row[c];
  }
  const double size_a = static_cast<double>(cut.size_a());
  const double size_b = static_cast<double>(cut.size_complement());
  double agreeing_pairs = 0.0;
  for (std::size_t c = 0; c < m; ++c) {
    const double oa = static_cast<double>(ones_a[c]);
    const double ob = static_cast<double>(ones_b[c]);
    agreeing_pairs += oa * ob + (size_a - oa) * (size_b - ob);
  }
  return agreeing_pairs / (size_a * size_b);
}

double graph_cut_cost(const Bipartition& cut, const Graph& graph) {
  require_universe(cut, graph.num_nodes(), "graph");
  double total = 0.0;
  for (const Edge& e : graph.edges()) {
    if (cut.side_a.test(e.u) != cut.side_a.test(e.v)) total += e.weight;
  }
  return total;
}

double exp_distance_cost(const Bipartition& cut, const PointCloud& points) {
  require_universe(cut, points.size(), "point cloud");
  const std::vector<std::size_t> side_a = cut.side_a.indices();
  const std::vector<std::size_t> side_b = cut.side_a.complement().indices();
  const std::size_t dims = points.dims();
  double total = 0.0;
  for (std::size_t u : side_a) {
    const auto pu = points.point(u);
    for (std::size_t v : side_b) {
      const auto pv = points.point(v);
      double sq = 0.0;
      for (std::size_t d = 0; d < dims; ++d) {
        const double diff = pu[d] - pv[d];
        sq += diff * diff;
      }
      total += std::exp(-std::sqrt(sq));
    }
  }
  return total;
}

double normalize_cost(double raw, const Bipartition& cut) {
  return raw / (static_cast<double>(cut.size_a()) * static_cast<double>(cut.size_complement()));
}

CutPool assign_costs(const CutPool& pool, const CostFn& cost, unsigned threads) {
  std::vector<Bipartition> cuts(pool.begin(), pool.end());
  parallel_for(cuts.size(), threads, [&](std::size_t i) { cuts[i].cost = cost(cuts[i]); });
  return CutPool(pool.num_objects(), std::move(cuts));
}

}  // namespace tangles
