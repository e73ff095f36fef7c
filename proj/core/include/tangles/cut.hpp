#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tangles/bitvec.hpp"

namespace tangles {

enum class Direction : std::uint8_t { kA = 0, kComplement = 1 };

constexpr Direction opposite(Direction d) {
  return d == Direction::kA ? Direction::kComplement : Direction::kA;
}

// Provenance of an axis-parallel cut {x_axis < threshold}.
struct AxisCutMeta {
  std::size_t axis = 0;
  double threshold = 0.0;
  // True when side_a is the below-threshold side.
  bool side_a_below = true;
};

// One unordered cut {A, A^c}. side_a is canonical: it always contains object 0,
// so every cut has exactly one representation.
struct Bipartition {
  int id = 0;
  BitVec side_a;
  double cost = 0.0;
  std::optional<AxisCutMeta> axis;

  std::size_t universe_size() const noexcept { return side_a.size(); }
  std::size_t size_a() const noexcept { return side_a.count(); }
  std::size_t size_complement() const noexcept { return side_a.size() - side_a.count(); }
  BitVec side(Direction direction) const {
    return direction == Direction::kA ? side_a : side_a.complement();
  }
  bool contains(std::size_t object, Direction direction) const noexcept {
    return side_a.test(object) == (direction == Direction::kA);
  }
};

// Builds the canonical cut induced by a membership vector. Throws kEmptySide
// if membership is constant and kLengthMismatch if it has the wrong length
// (only checked when expected_size is given).
Bipartition make_cut(const BitVec& membership, int id,
                     std::optional<std::size_t> expected_size = std::nullopt);

// Cuts over a fixed universe of num_objects objects, sorted by (cost, id).
class CutPool {
 public:
  CutPool() = default;
  // Validates that every cut spans num_objects objects with two non-empty
  // sides and finite non-negative cost, then sorts.
  CutPool(std::size_t num_objects, std::vector<Bipartition> cuts);

  std::size_t num_objects() const noexcept { return num_objects_; }
  std::size_t size() const noexcept { return cuts_.size(); }
  bool empty() const noexcept { return cuts_.empty(); }
  const Bipartition& operator[](std::size_t i) const noexcept { return cuts_[i]; }
  std::span<const Bipartition> cuts() const noexcept { return cuts_; }
  auto begin() const noexcept { return cuts_.begin(); }
  auto end() const noexcept { return cuts_.end(); }

  // The cuts with cost <= max_psi.
  CutPool prefix(double max_psi) const;
  // Position of the cut with the given id, if present.
  std::optional<std::size_t> position_of(int id) const;

 private:
  std::size_t num_objects_ = 0;
  std::vector<Bipartition> cuts_;
};

}  // namespace tangles
