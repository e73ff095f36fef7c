#include "tangles/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tangles/error.hpp"

namespace tangles {

namespace {

double entropy(const std::map<int, std::size_t>& counts, double total) {
  double h = 0.0;
  for (const auto& [label, count] : counts) {
    const double p = static_cast<double>(count) / total;
    h -= p * std::log(p);
  }
  return h;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double nmi(std::span<const int> labels_a, std::span<const int> labels_b) {
  if (labels_a.size() != labels_b.size()) {
    throw Error(ErrorCode::kLengthMismatch, "labelings of length " +
                                                std::to_string(labels_a.size()) + " and " +
                                                std::to_string(labels_b.size()));
  }
  if (labels_a.empty()) return 0.0;
  std::map<int, std::size_t> count_a;
  std::map<int, std::size_t> count_b;
  std::map<std::pair<int, int>, std::size_t> joint;
  for (std::size_t i = 0; i < labels_a.size(); ++i) {
    ++count_a[labels_a[i]];
    ++count_b[labels_b[i]];
    ++joint[{labels_a[i], labels_b[i]}];
  }
  if (count_a.size() < 2 || count_b.size() < 2) return 0.0;
  // A one-to-one contingency table means identical partitions; returning 1
  // exactly avoids rounding in the entropy sums.
  if (joint.size() == count_a.size() && joint.size() == count_b.size()) return 1.0;

  const double total = static_cast<double>(labels_a.size());
  double mi = 0.0;
  for (const auto& [key, count] : joint) {
    const double pxy = static_cast<double>(count) / total;
    const double px = static_cast<double>(count_a[key.first]) / total;
    const double py = static_cast<double>(count_b[key.second]) / total;
    mi += pxy * std::log(pxy / (px * py));
  }
  const double normalizer = 0.5 * (entropy(count_a, total) + entropy(count_b, total));
  return std::clamp(mi / normalizer, 0.0, 1.0);
}

double spearman_rho(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kLengthMismatch, "spearman needs two samples of equal length >= 2");
  }
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace tangles
