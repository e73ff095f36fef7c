#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tangles/bitvec.hpp"
#include "tangles/cut.hpp"

namespace tangles {

// A chosen side of the cut at position `cut` of the pool.
struct OrientedSide {
  std::size_t cut = 0;
  Direction direction = Direction::kA;

  friend bool operator==(const OrientedSide&, const OrientedSide&) = default;
};

// Both sides of every pool cut, materialized once.
class SideTable {
 public:
  SideTable() = default;
  explicit SideTable(const CutPool& pool);

  const BitVec& members(OrientedSide side) const noexcept {
    return sides_[2 * side.cut + static_cast<std::size_t>(side.direction)];
  }
  std::size_t num_cuts() const noexcept { return sides_.size() / 2; }

 private:
  std::vector<BitVec> sides_;
};

// Inclusion-minimal oriented sides of a tangle.
using Core = std::vector<OrientedSide>;

// True iff every triple drawn with repetition from core ∪ {candidate} that
// contains the candidate intersects in at least `agreement` objects. The core
// itself is assumed consistent.
bool consistent(std::span<const BitVec* const> core, const BitVec& candidate,
                std::size_t agreement);
bool consistent(std::span<const BitVec> core, const BitVec& candidate,
                std::size_t agreement);

// Core of the tangle obtained by adding `side`: unchanged if some core side is
// a subset of `side`; otherwise core sides that contain `side` are dropped
// and `side` is inserted. No consistency check.
Core updated_core(const Core& core, OrientedSide side, const SideTable& sides);

// updated_core plus the consistency check; nullopt means the orientation
// cannot be added.
std::optional<Core> extend_core(const Core& core, OrientedSide side,
                                std::size_t agreement, const SideTable& sides);

struct TangleNode {
  std::optional<std::size_t> parent;
  // Number of pool cuts oriented on the root path.
  std::size_t level = 0;
  // The side chosen at this level; empty for the root.
  std::optional<OrientedSide> oriented;
  Core core;
  // Set when the node was tried against the next cut and neither side fit.
  bool maximal = false;
  // children[0] extends with side A, children[1] with the complement.
  std::array<std::optional<std::size_t>, 2> children;

  std::size_t num_children() const noexcept {
    return static_cast<std::size_t>(children[0].has_value()) +
           static_cast<std::size_t>(children[1].has_value());
  }
  bool is_leaf() const noexcept { return num_children() == 0; }
};

// Binary tree whose root-to-node paths are the tangles of growing cost
// prefixes of a cut pool. Node 0 is the root.
class TangleSearchTree {
 public:
  TangleSearchTree(std::shared_ptr<const CutPool> pool, std::size_t agreement);

  const CutPool& pool() const noexcept { return *pool_; }
  std::shared_ptr<const CutPool> shared_pool() const noexcept { return pool_; }
  const SideTable& sides() const noexcept { return *sides_; }
  std::size_t agreement() const noexcept { return agreement_; }
  std::size_t num_objects() const noexcept { return pool_->num_objects(); }

  std::size_t size() const noexcept { return nodes_.size(); }
  const TangleNode& node(std::size_t id) const noexcept { return nodes_[id]; }
  std::span<const TangleNode> nodes() const noexcept { return nodes_; }

  // Appends a child orienting the cut at position parent.level. The core is
  // derived with updated_core unless given. No consistency check.
  std::size_t add_child(std::size_t parent, Direction direction);
  std::size_t add_child(std::size_t parent, Direction direction, Core core);
  void set_maximal(std::size_t id, bool maximal) { nodes_[id].maximal = maximal; }

  // Orientations on the root path, ordered by level.
  std::vector<OrientedSide> path(std::size_t id) const;
  // Orientation per pool position along the root path (length = level).
  std::vector<Direction> orientation(std::size_t id) const;
  std::vector<std::size_t> leaves() const;
  std::vector<std::size_t> nodes_at_level(std::size_t level) const;
  std::size_t height() const noexcept;

 private:
  std::shared_ptr<const CutPool> pool_;
  std::shared_ptr<const SideTable> sides_;
  std::size_t agreement_;
  std::vector<TangleNode> nodes_;
};

struct BuildOptions {
  // Cuts with cost > max_psi are ignored; unset means all cuts.
  std::optional<double> max_psi;
  unsigned threads = 1;
};

// Breadth-first construction: level i - 1 nodes are extended by both sides of
// the i-th cut (side A first) wherever consistent. Stops when a level is empty
// or the cuts run out. Output does not depend on options.threads.
TangleSearchTree build_tree(std::shared_ptr<const CutPool> pool, std::size_t agreement,
                            const BuildOptions& options = {});
TangleSearchTree build_tree(const CutPool& pool, std::size_t agreement,
                            const BuildOptions& options = {});

// Every orientation of all pool cuts that satisfies the triple condition,
// found by checking all 2^m candidates. Throws kTooLarge when m > limit.
std::vector<std::vector<Direction>> brute_force_tangles(const CutPool& pool,
                                                        std::size_t agreement,
                                                        std::size_t limit = 16);

}  // namespace tangles
