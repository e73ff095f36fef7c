#include "tangles/cutgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "tangles/error.hpp"
#include "tangles/log.hpp"
#include "tangles/parallel.hpp"
#include "tangles/random.hpp"

namespace tangles {

CutPool column_cuts(const BinaryMatrix& answers) {
  std::vector<Bipartition> cuts;
  for (std::size_t c = 0; c < answers.cols(); ++c) {
    const BitVec membership = BitVec::from_bools(answers.column(c));
    const std::size_t ones = membership.count();
    if (ones == 0 || ones == membership.size()) {
      log::warn("column " + std::to_string(c) + " is constant and yields no cut");
      continue;
    }
    cuts.push_back(make_cut(membership, static_cast<int>(c)));
  }
  return CutPool(answers.rows(), std::move(cuts));
}

namespace {

// w(u, v) summed over parallel edges.
class WeightLookup {
 public:
  static constexpr std::size_t kDenseLimit = 2048;

  explicit WeightLookup(const Graph& graph) : n_(graph.num_nodes()) {
    if (n_ <= kDenseLimit) {
      dense_.assign(n_ * n_, 0.0);
      for (const Edge& e : graph.edges()) {
        dense_[e.u * n_ + e.v] += e.weight;
        dense_[e.v * n_ + e.u] += e.weight;
      }
    } else {
      for (const Edge& e : graph.edges()) {
        sparse_[key(e.u, e.v)] += e.weight;
      }
    }
  }

  double operator()(std::size_t u, std::size_t v) const {
    if (!dense_.empty()) return dense_[u * n_ + v];
    const auto it = sparse_.find(key(u, v));
    return it == sparse_.end() ? 0.0 : it->second;
  }

 private:
  std::uint64_t key(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * n_ + v;
  }

  std::size_t n_;
  std::vector<double> dense_;
  std::unordered_map<std::uint64_t, double> sparse_;
};

double cut_weight(const Graph& graph, const std::vector<std::uint8_t>& in_a) {
  double total = 0.0;
  for (const Edge& e : graph.edges()) {
    if (in_a[e.u] != in_a[e.v]) total += e.weight;
  }
  return total;
}

struct Candidate {
  double d;
  std::size_t node;
};

std::vector<Candidate> sorted_unlocked(const std::vector<double>& d,
                                       const std::vector<std::uint8_t>& in_a,
                                       const std::vector<std::uint8_t>& locked, bool side) {
  std::vector<Candidate> out;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (!locked[v] && (in_a[v] != 0) == side) out.push_back({d[v], v});
  }
  std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
    if (x.d != y.d) return x.d > y.d;
    return x.node < y.node;
  });
  return out;
}

}  // namespace

KlResult kl_refine(const Graph& graph, BitVec start, std::size_t iterations) {
  const std::size_t n = graph.num_nodes();
  if (start.size() != n) {
    throw Error(ErrorCode::kLengthMismatch, "start partition has length " +
                                                std::to_string(start.size()) + ", graph has " +
                                                std::to_string(n) + " nodes");
  }
  const WeightLookup w(graph);
  const double eps = 1e-12 * std::max(1.0, graph.total_weight());
  std::vector<std::uint8_t> in_a(n);
  for (std::size_t v = 0; v < n; ++v) in_a[v] = start.test(v) ? 1 : 0;

  KlResult result;
  for (std::size_t pass = 0; pass < iterations; ++pass) {
    // D = external minus internal weight.
    std::vector<double> d(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (const Neighbor& nb : graph.neighbors(v)) {
        d[v] += in_a[nb.node] != in_a[v] ? nb.weight : -nb.weight;
      }
    }
    std::vector<std::uint8_t> locked(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> swaps;
    std::vector<double> gains;
    for (;;) {
      const auto side_a = sorted_unlocked(d, in_a, locked, true);
      const auto side_b = sorted_unlocked(d, in_a, locked, false);
      if (side_a.empty() || side_b.empty()) break;
      double best = -std::numeric_limits<double>::infinity();
      std::size_t best_a = 0;
      std::size_t best_b = 0;
      for (const Candidate& a : side_a) {
        if (a.d + side_b.front().d <= best) break;
        for (const Candidate& b : side_b) {
          // Weights are non-negative, so D_a + D_b bounds the gain.
          if (a.d + b.d <= best) break;
          const double gain = a.d + b.d - 2.0 * w(a.node, b.node);
          if (gain > best) {
            best = gain;
            best_a = a.node;
            best_b = b.node;
          }
        }
      }
      locked[best_a] = 1;
      locked[best_b] = 1;
      swaps.emplace_back(best_a, best_b);
      gains.push_back(best);
      // Pretend the pair has moved when updating the unlocked D values.
      for (const Neighbor& nb : graph.neighbors(best_a)) {
        if (locked[nb.node]) continue;
        d[nb.node] += (in_a[nb.node] ? 2.0 : -2.0) * nb.weight;
      }
      for (const Neighbor& nb : graph.neighbors(best_b)) {
        if (locked[nb.node]) continue;
        d[nb.node] += (in_a[nb.node] ? -2.0 : 2.0) * nb.weight;
      }
    }

    double running = 0.0;
    double best_total = 0.0;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < gains.size(); ++k) {
      running += gains[k];
      if (running > best_total + eps) {
        best_total = running;
        best_k = k + 1;
      }
    }
    if (best_k == 0) break;

    KlPass record;
    record.cut_before = cut_weight(graph, in_a);
    for (std::size_t k = 0; k < best_k; ++k) {
      std::swap(in_a[swaps[k].first], in_a[swaps[k].second]);
      record.gains.push_back(gains[k]);
    }
    record.cut_after = cut_weight(graph, in_a);
    result.passes.push_back(std::move(record));
  }
  result.side = BitVec::from_bools(in_a);
  return result;
}

CutPool kl_cuts(const Graph& graph, std::size_t count, std::size_t iterations,
                std::uint64_t seed, unsigned threads) {
  const std::size_t n = graph.num_nodes();
  if (n < 2) throw Error(ErrorCode::kTooFewNodes, "Kernighan-Lin needs at least 2 nodes");
  if (count == 0 || iterations == 0) {
    throw Error(ErrorCode::kBadParams, "Kernighan-Lin needs count >= 1 and iterations >= 1");
  }
  std::vector<BitVec> found(count);
  parallel_for(count, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(std::span<std::size_t>(order));
    BitVec start(n);
    for (std::size_t j = 0; j < n / 2; ++j) start.set(order[j]);
    found[i] = kl_refine(graph, std::move(start), iterations).side;
  });

  std::set<BitVec> seen;
  std::vector<Bipartition> cuts;
  for (std::size_t i = 0; i < count; ++i) {
    Bipartition cut = make_cut(found[i], static_cast<int>(i));
    if (seen.insert(cut.side_a).second) cuts.push_back(std::move(cut));
  }
  if (cuts.size() < count) {
    log::info(std::to_string(count - cuts.size()) + " of " + std::to_string(count) +
              " Kernighan-Lin cuts were duplicates");
  }
  return CutPool(n, std::move(cuts));
}

CutPool axis_slices(const PointCloud& points, std::size_t a) {
  if (a < 2) throw Error(ErrorCode::kBadParams, "slice spacing a must be at least 2");
  const std::size_t n = points.size();
  std::vector<Bipartition> cuts;
  if (n < 2) return CutPool(n, {});
  for (std::size_t axis = 0; axis < points.dims(); ++axis) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const double cx = points.at(x, axis);
      const double cy = points.at(y, axis);
      if (cx != cy) return cx < cy;
      return x < y;
    });
    if (points.at(order.front(), axis) == points.at(order.back(), axis)) {
      log::warn(std::string(error_code_name(ErrorCode::kDegenerateAxis)) + ": axis " +
                std::to_string(axis) + " is constant and is skipped");
      continue;
    }
    BitVec below(n);
    std::size_t size = 0;
    auto emit = [&](std::size_t target) {
      for (; size < target; ++size) below.set(order[size]);
      Bipartition cut = make_cut(below, static_cast<int>(cuts.size()));
      const double lo = points.at(order[size - 1], axis);
      const double hi = points.at(order[size], axis);
      cut.axis = AxisCutMeta{axis, 0.5 * (lo + hi), below.test(0)};
      cuts.push_back(std::move(cut));
    };
    emit(1);
    while (n - size >= a) emit(size + a - 1);
  }
  return CutPool(n, std::move(cuts));
}

CutPool random_projection_cuts(const PointCloud& points, std::size_t count, std::uint64_t seed,
                               unsigned threads) {
  const std::size_t n = points.size();
  const std::size_t dims = points.dims();
  if (n < 2) throw Error(ErrorCode::kTooFewNodes, "projection cuts need at least 2 points");
  if (count == 0 || dims == 0) {
    throw Error(ErrorCode::kBadParams, "projection cuts need count >= 1 and at least one axis");
  }
  std::vector<BitVec> sides(count);
  parallel_for(count, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    std::vector<double> direction(dims);
    double norm = 0.0;
    while (norm == 0.0) {
      norm = 0.0;
      for (double& x : direction) {
        x = rng.normal();
        norm += x * x;
      }
    }
    norm = std::sqrt(norm);
    std::vector<std::pair<double, std::size_t>> projected(n);
    double mean = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      double dot = 0.0;
      for (std::size_t j = 0; j < dims; ++j) dot += points.at(v, j) * direction[j] / norm;
      projected[v] = {dot, v};
      mean += dot;
    }
    mean /= static_cast<double>(n);
    for (auto& item : projected) item.first -= mean;
    std::sort(projected.begin(), projected.end());

    // Within-group squared error for a split after k sorted values.
    std::vector<double> s1(n + 1, 0.0);
    std::vector<double> s2(n + 1, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      s1[v + 1] = s1[v] + projected[v].first;
      s2[v + 1] = s2[v] + projected[v].first * projected[v].first;
    }
    std::size_t best_k = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < n; ++k) {
      const double left = s2[k] - s1[k] * s1[k] / static_cast<double>(k);
      const double rs1 = s1[n] - s1[k];
      const double right = (s2[n] - s2[k]) - rs1 * rs1 / static_cast<double>(n - k);
      if (left + right < best) {
        best = left + right;
        best_k = k;
      }
    }
    BitVec side(n);
    for (std::size_t v = 0; v < best_k; ++v) side.set(projected[v].second);
    sides[i] = std::move(side);
  });
  std::vector<Bipartition> cuts;
  for (std::size_t i = 0; i < count; ++i) cuts.push_back(make_cut(sides[i], static_cast<int>(i)));
  return CutPool(n, std::move(cuts));
}

}  // namespace tangles
