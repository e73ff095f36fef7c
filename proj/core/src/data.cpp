#include "tangles/data.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tangles/error.hpp"
#include "tangles/log.hpp"

namespace tangles {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0) {}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows * cols) {
    throw Error(ErrorCode::kLengthMismatch,
                "binary matrix expects " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > 1) {
      throw Error(ErrorCode::kParse, "entry (" + std::to_string(i / cols) + ", " +
                                         std::to_string(i % cols) + ") is not 0 or 1");
    }
  }
}

std::vector<std::uint8_t> BinaryMatrix::column(std::size_t c) const {
  std::vector<std::uint8_t> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Graph::Graph(std::size_t num_nodes, std::vector<Edge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
  std::vector<std::size_t> degree(num_nodes_ + 1, 0);
  for (const Edge& e : edges_) {
    if (e.u >= num_nodes_ || e.v >= num_nodes_) {
      throw Error(ErrorCode::kBadParams, "edge (" + std::to_string(e.u) + ", " +
                                             std::to_string(e.v) + ") outside " +
                                             std::to_string(num_nodes_) + " nodes");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kBadParams, "self-loop at node " + std::to_string(e.u));
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw Error(ErrorCode::kBadParams, "edge (" + std::to_string(e.u) + ", " +
                                             std::to_string(e.v) +
                                             ") needs a finite non-negative weight");
    }
    ++degree[e.u + 1];
    ++degree[e.v + 1];
  }
  offsets_.assign(num_nodes_ + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets_.begin());
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = {e.v, e.weight};
    adjacency_[fill[e.v]++] = {e.u, e.weight};
  }
}

double Graph::total_weight() const noexcept {
  double total = 0.0;
  for (const Edge& e : edges_) total += e.weight;
  return total;
}

PointCloud::PointCloud(std::size_t num_points, std::size_t dims, std::vector<double> coords)
    : num_points_(num_points), dims_(dims), coords_(std::move(coords)) {
  if (coords_.size() != num_points * dims) {
    throw Error(ErrorCode::kLengthMismatch,
                "point cloud expects " + std::to_string(num_points * dims) +
                    " coordinates, got " + std::to_string(coords_.size()));
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!std::isfinite(coords_[i])) {
      throw Error(ErrorCode::kBadParams,
                  "point " + std::to_string(i / std::max<std::size_t>(dims, 1)) +
                      " has a non-finite coordinate");
    }
  }
  if (has_duplicates()) log::warn("point cloud contains coincident points");
}

bool PointCloud::has_duplicates() const {
  if (num_points_ < 2) return false;
  std::vector<std::size_t> order(num_points_);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto less = [&](std::size_t a, std::size_t b) {
    const auto pa = point(a);
    const auto pb = point(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto pa = point(order[i - 1]);
    const auto pb = point(order[i]);
    if (std::equal(pa.begin(), pa.end(), pb.begin())) return true;
  }
  return false;
}

}  // namespace tangles
