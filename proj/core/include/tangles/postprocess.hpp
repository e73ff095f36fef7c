#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "tangles/search.hpp"

namespace tangles {

// Removes leaf branches of at most `depth` edges, measured from the leaf up to
// the closest node with two children (or the root), until none is left.
// depth 0 returns an identical tree. Node ids are reassigned breadth-first.
TangleSearchTree prune_tree(const TangleSearchTree& tree, std::size_t depth);

// Non-increasing weight applied to cut costs when averaging distinguishing
// cuts.
struct WeightingFn {
  std::function<double(double)> h;

  double operator()(double cost) const { return h(cost); }

  static WeightingFn uniform();
  // exp(-lambda * (cost - min_cost)).
  static WeightingFn exponential(double lambda, double min_cost);
};

enum class NodeKind { kRoot, kSplitting, kLeaf };

// A cut that separates the two subtrees of a split, with the side the right
// (side A) subtree points to.
struct DistinguishingCut {
  std::size_t cut = 0;  // pool position
  Direction right = Direction::kA;

  friend bool operator==(const DistinguishingCut&, const DistinguishingCut&) = default;
};

struct CondensedNode {
  std::size_t id = 0;
  NodeKind kind = NodeKind::kLeaf;
  std::optional<std::size_t> parent;
  // Right (side A) child first. Splitting nodes have two, the root may have one.
  std::vector<std::size_t> children;
  // Node of the underlying search tree.
  std::size_t search_node = 0;
  // Filled for splitting nodes (and a splitting root).
  std::vector<DistinguishingCut> distinguishing;
  // Probability of moving to children[0], per object; splitting nodes only.
  std::vector<double> p_right;
  // Probability of reaching this node, per object.
  std::vector<double> probability;
};

// Root, splitting nodes and leaves of a search tree with the paths between
// them contracted. Node 0 is the root; ids follow a breadth-first walk.
class CondensedTree {
 public:
  CondensedTree(TangleSearchTree tree, std::vector<CondensedNode> nodes)
      : tree_(std::move(tree)), nodes_(std::move(nodes)) {}

  const TangleSearchTree& search_tree() const noexcept { return tree_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const CondensedNode& node(std::size_t id) const noexcept { return nodes_[id]; }
  CondensedNode& node(std::size_t id) noexcept { return nodes_[id]; }
  std::span<const CondensedNode> nodes() const noexcept { return nodes_; }
  std::vector<std::size_t> leaves() const;
  // Cost of the first cut below a split (the order at which it splits), or
  // of the last cut on the path for leaves. 0 for a bare root.
  double height(std::size_t id) const;

 private:
  TangleSearchTree tree_;
  std::vector<CondensedNode> nodes_;
};

// Structure only: kinds, parents, children and distinguishing cuts.
CondensedTree condense(TangleSearchTree tree);

// Cuts oriented one way by every leaf below the right child of `split` and the
// other way by every leaf below its left child. `split` is a search tree node
// with two children.
std::vector<DistinguishingCut> distinguishing_cuts(const TangleSearchTree& tree,
                                                   std::size_t split);

// p_right(v) = sum of h(cost) over cuts whose right side holds v, divided by
// the sum of h(cost) over all cuts. Throws kNoDistinguishingCuts for an empty
// set and kBadParams when the weights sum to zero.
std::vector<double> branch_probabilities(const CutPool& pool,
                                         std::span<const DistinguishingCut> cuts,
                                         const WeightingFn& h);

// Fills p_right and probability on every node. An empty distinguishing set
// falls back to the first cut below the split, with a warning.
void annotate(CondensedTree& tree, const WeightingFn& h);

// prune, condense and annotate.
CondensedTree postprocess(const TangleSearchTree& tree, std::size_t prune_depth,
                          const WeightingFn& h);

// Row-major objects x selected nodes; columns follow node_ids.
struct SoftMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  std::vector<std::size_t> node_ids;

  double at(std::size_t r, std::size_t c) const noexcept { return values[r * cols + c]; }
  std::span<const double> row(std::size_t r) const noexcept {
    return {values.data() + r * cols, cols};
  }
};

// Probabilities of every object for the selected nodes (sorted by id). The
// selection must meet every root-to-leaf path exactly once, otherwise
// kInvalidSelection. Default: all leaves. Requires an annotated tree.
SoftMatrix soft_assignments(const CondensedTree& tree,
                            std::optional<std::vector<std::size_t>> selection = std::nullopt);

// Column of the row maximum; ties go to the lowest column.
std::vector<int> hard_assignments(const SoftMatrix& soft);

struct Interval {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
};

// Tightest per-axis box implied by the orientations on the root path of a
// search tree node. Throws kMissingAxisMetadata if an oriented cut has none.
std::vector<Interval> core_intervals(const TangleSearchTree& tree, std::size_t node,
                                     std::size_t dims);

}  // namespace tangles
