#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tangles {

// Dense n x m matrix of 0/1 answers; rows are objects, columns are questions.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);
  // Throws kLengthMismatch if values.size() != rows * cols and kParse if an
  // entry is not 0 or 1.
  BinaryMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return values_[row * cols_ + col];
  }
  void set(std::size_t row, std::size_t col, std::uint8_t value) noexcept {
    values_[row * cols_ + col] = value;
  }
  std::span<const std::uint8_t> row(std::size_t r) const noexcept {
    return {values_.data() + r * cols_, cols_};
  }
  std::vector<std::uint8_t> column(std::size_t c) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> values_;
};

struct Edge {
  std::size_t u;
  std::size_t v;
  double weight;
};

struct Neighbor {
  std::size_t node;
  double weight;
};

// Undirected weighted graph without self-loops. Parallel edges are kept and
// their weights add up in every cost.
class Graph {
 public:
  Graph() = default;
  // Throws kBadParams for self-loops, out-of-range endpoints or negative or
  // non-finite weights.
  Graph(std::size_t num_nodes, std::vector<Edge> edges);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(std::size_t node) const noexcept {
    return {adjacency_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
  }
  double total_weight() const noexcept;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

// n x d real matrix, one point per row.
class PointCloud {
 public:
  PointCloud() = default;
  // Throws kLengthMismatch on a size mismatch and kBadParams on non-finite
  // coordinates. Coincident points only produce a warning.
  PointCloud(std::size_t num_points, std::size_t dims, std::vector<double> coords);

  std::size_t size() const noexcept { return num_points_; }
  std::size_t dims() const noexcept { return dims_; }
  std::span<const double> point(std::size_t i) const noexcept {
    return {coords_.data() + i * dims_, dims_};
  }
  double at(std::size_t i, std::size_t axis) const noexcept {
    return coords_[i * dims_ + axis];
  }
  std::span<const double> coords() const noexcept { return coords_; }

  bool has_duplicates() const;

 private:
  std::size_t num_points_ = 0;
  std::size_t dims_ = 0;
  std::vector<double> coords_;
};

}  // namespace tangles
