#include "tangles/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "tangles/error.hpp"
#include "tangles/log.hpp"

namespace tangles {

namespace {

std::size_t alive_children(const TangleNode& node, const std::vector<bool>& alive) {
  std::size_t count = 0;
  for (const auto& child : node.children) {
    if (child && alive[*child]) ++count;
  }
  return count;
}

// Leaves of the subtree rooted at `root`.
std::vector<std::size_t> subtree_leaves(const TangleSearchTree& tree, std::size_t root) {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    const TangleNode& node = tree.node(v);
    if (node.is_leaf()) {
      out.push_back(v);
      continue;
    }
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      if (*it) stack.push_back(**it);
    }
  }
  return out;
}

// Follows single-child chains down to the next node that splits or ends.
std::size_t next_branch_point(const TangleSearchTree& tree, std::size_t v) {
  while (tree.node(v).num_children() == 1) {
    const TangleNode& node = tree.node(v);
    v = node.children[0] ? *node.children[0] : *node.children[1];
  }
  return v;
}

}  // namespace

TangleSearchTree prune_tree(const TangleSearchTree& tree, std::size_t depth) {
  if (depth == 0) return tree;
  std::vector<bool> alive(tree.size(), true);
  for (;;) {
    std::vector<std::size_t> doomed;
    for (std::size_t v = 1; v < tree.size(); ++v) {
      if (!alive[v] || alive_children(tree.node(v), alive) != 0) continue;
      std::vector<std::size_t> branch{v};
      std::size_t up = *tree.node(v).parent;
      while (up != 0 && alive_children(tree.node(up), alive) < 2) {
        branch.push_back(up);
        up = *tree.node(up).parent;
      }
      if (branch.size() <= depth) doomed.insert(doomed.end(), branch.begin(), branch.end());
    }
    if (doomed.empty()) break;
    for (std::size_t v : doomed) alive[v] = false;
  }

  TangleSearchTree out(tree.shared_pool(), tree.agreement());
  std::vector<std::size_t> new_id(tree.size(), 0);
  // Parents precede children and levels are contiguous, so id order is
  // already breadth-first.
  for (std::size_t v = 1; v < tree.size(); ++v) {
    if (!alive[v]) continue;
    const TangleNode& node = tree.node(v);
    new_id[v] = out.add_child(new_id[*node.parent], node.oriented->direction, node.core);
    out.set_maximal(new_id[v], node.maximal);
  }
  out.set_maximal(0, tree.node(0).maximal);
  return out;
}

WeightingFn WeightingFn::uniform() {
  return WeightingFn{[](double) { return 1.0; }};
}

WeightingFn WeightingFn::exponential(double lambda, double min_cost) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::kBadParams, "exponential weighting needs a finite lambda >= 0");
  }
  return WeightingFn{[lambda, min_cost](double cost) { return std::exp(-lambda * (cost - min_cost)); }};
}

std::vector<std::size_t> CondensedTree::leaves() const {
  std::vector<std::size_t> out;
  for (const CondensedNode& node : nodes_) {
    if (node.children.empty()) out.push_back(node.id);
  }
  return out;
}

double CondensedTree::height(std::size_t id) const {
  const TangleNode& node = tree_.node(nodes_[id].search_node);
  if (node.num_children() == 2) return tree_.pool()[node.level].cost;
  if (node.level > 0) return tree_.pool()[node.level - 1].cost;
  return 0.0;
}

std::vector<DistinguishingCut> distinguishing_cuts(const TangleSearchTree& tree,
                                                   std::size_t split) {
  const TangleNode& node = tree.node(split);
  if (node.num_children() != 2) {
    throw Error(ErrorCode::kBadParams, "node " + std::to_string(split) + " does not split");
  }
  std::vector<std::vector<Direction>> right;
  std::vector<std::vector<Direction>> left;
  std::size_t common = tree.pool().size();
  for (std::size_t leaf : subtree_leaves(tree, *node.children[0])) {
    right.push_back(tree.orientation(leaf));
    common = std::min(common, right.back().size());
  }
  for (std::size_t leaf : subtree_leaves(tree, *node.children[1])) {
    left.push_back(tree.orientation(leaf));
    common = std::min(common, left.back().size());
  }
  std::vector<DistinguishingCut> out;
  // Cuts above the split are oriented alike by every leaf.
  for (std::size_t cut = node.level; cut < common; ++cut) {
    const Direction d = right.front()[cut];
    auto is = [cut](Direction want) {
      return [cut, want](const std::vector<Direction>& o) { return o[cut] == want; };
    };
    if (std::all_of(right.begin(), right.end(), is(d)) &&
        std::all_of(left.begin(), left.end(), is(opposite(d)))) {
      out.push_back({cut, d});
    }
  }
  return out;
}

std::vector<double> branch_probabilities(const CutPool& pool,
                                         std::span<const DistinguishingCut> cuts,
                                         const WeightingFn& h) {
  if (cuts.empty()) {
    throw Error(ErrorCode::kNoDistinguishingCuts, "split has no distinguishing cuts");
  }
  std::vector<double> weights(cuts.size());
  double denominator = 0.0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    weights[i] = h(pool[cuts[i].cut].cost);
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
      throw Error(ErrorCode::kBadParams, "weighting function returned an invalid weight");
    }
    denominator += weights[i];
  }
  if (denominator <= 0.0) {
    throw Error(ErrorCode::kBadParams, "weights of the distinguishing cuts sum to zero");
  }
  std::vector<double> numerator(pool.num_objects(), 0.0);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Bipartition& cut = pool[cuts[i].cut];
    for (std::size_t v = 0; v < numerator.size(); ++v) {
      if (cut.contains(v, cuts[i].right)) numerator[v] += weights[i];
    }
  }
  for (double& value : numerator) value /= denominator;
  return numerator;
}

CondensedTree condense(TangleSearchTree tree) {
  std::vector<CondensedNode> nodes;
  CondensedNode root;
  root.id = 0;
  root.kind = NodeKind::kRoot;
  root.search_node = 0;
  nodes.push_back(root);

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const std::size_t s = nodes[id].search_node;
    const TangleNode& node = tree.node(s);
    if (node.num_children() == 2) nodes[id].distinguishing = distinguishing_cuts(tree, s);
    for (const auto& child : node.children) {
      if (!child) continue;
      const std::size_t target = next_branch_point(tree, *child);
      CondensedNode next;
      next.id = nodes.size();
      next.parent = id;
      next.search_node = target;
      next.kind = tree.node(target).num_children() == 2 ? NodeKind::kSplitting : NodeKind::kLeaf;
      nodes[id].children.push_back(next.id);
      queue.push_back(next.id);
      nodes.push_back(std::move(next));
    }
  }
  return CondensedTree(std::move(tree), std::move(nodes));
}

void annotate(CondensedTree& tree, const WeightingFn& h) {
  const std::size_t n = tree.search_tree().num_objects();
  const CutPool& pool = tree.search_tree().pool();
  tree.node(0).probability.assign(n, 1.0);
  // Ids are breadth-first, so parents are annotated first.
  for (std::size_t id = 0; id < tree.size(); ++id) {
    CondensedNode& node = tree.node(id);
    if (node.children.size() == 1) {
      tree.node(node.children[0]).probability = node.probability;
      continue;
    }
    if (node.children.size() != 2) continue;
    if (node.distinguishing.empty()) {
      const std::size_t level = tree.search_tree().node(node.search_node).level;
      log::warn("split at condensed node " + std::to_string(id) +
                " has no distinguishing cuts; using the cut at position " +
                std::to_string(level));
      node.distinguishing.push_back({level, Direction::kA});
    }
    node.p_right = branch_probabilities(pool, node.distinguishing, h);
    std::vector<double> right(n);
    std::vector<double> left(n);
    for (std::size_t v = 0; v < n; ++v) {
      right[v] = node.probability[v] * node.p_right[v];
      left[v] = node.probability[v] * (1.0 - node.p_right[v]);
    }
    const std::size_t right_id = node.children[0];
    const std::size_t left_id = node.children[1];
    tree.node(right_id).probability = std::move(right);
    tree.node(left_id).probability = std::move(left);
  }
}

CondensedTree postprocess(const TangleSearchTree& tree, std::size_t prune_depth,
                          const WeightingFn& h) {
  CondensedTree condensed = condense(prune_tree(tree, prune_depth));
  annotate(condensed, h);
  return condensed;
}

SoftMatrix soft_assignments(const CondensedTree& tree,
                            std::optional<std::vector<std::size_t>> selection) {
  std::vector<std::size_t> ids = selection ? std::move(*selection) : tree.leaves();
  std::sort(ids.begin(), ids.end());
  if (ids.empty()) throw Error(ErrorCode::kInvalidSelection, "selection is empty");
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw Error(ErrorCode::kInvalidSelection, "selection repeats a node");
  }
  std::vector<bool> selected(tree.size(), false);
  for (std::size_t id : ids) {
    if (id >= tree.size()) {
      throw Error(ErrorCode::kInvalidSelection, "node " + std::to_string(id) + " does not exist");
    }
    selected[id] = true;
  }
  for (std::size_t leaf : tree.leaves()) {
    std::size_t hits = 0;
    for (std::optional<std::size_t> v = leaf; v; v = tree.node(*v).parent) {
      if (selected[*v]) ++hits;
    }
    if (hits != 1) {
      throw Error(ErrorCode::kInvalidSelection,
                  "path to leaf " + std::to_string(leaf) + " meets the selection " +
                      std::to_string(hits) + " times");
    }
  }

  SoftMatrix soft;
  soft.rows = tree.search_tree().num_objects();
  soft.cols = ids.size();
  soft.values.resize(soft.rows * soft.cols);
  for (std::size_t c = 0; c < ids.size(); ++c) {
    const std::vector<double>& p = tree.node(ids[c]).probability;
    if (p.size() != soft.rows) {
      throw Error(ErrorCode::kBadParams, "condensed tree is not annotated");
    }
    for (std::size_t r = 0; r < soft.rows; ++r) soft.values[r * soft.cols + c] = p[r];
  }
  soft.node_ids = std::move(ids);
  return soft;
}

std::vector<int> hard_assignments(const SoftMatrix& soft) {
  std::vector<int> labels(soft.rows, 0);
  for (std::size_t r = 0; r < soft.rows; ++r) {
    const auto row = soft.row(r);
    std::size_t best = 0;
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (row[c] > row[best]) best = c;
    }
    labels[r] = static_cast<int>(best);
  }
  return labels;
}

std::vector<Interval> core_intervals(const TangleSearchTree& tree, std::size_t node,
                                     std::size_t dims) {
  std::vector<Interval> box(dims);
  for (const OrientedSide& side : tree.path(node)) {
    const Bipartition& cut = tree.pool()[side.cut];
    if (!cut.axis) {
      throw Error(ErrorCode::kMissingAxisMetadata,
                  "cut " + std::to_string(cut.id) + " is not axis-parallel");
    }
    const AxisCutMeta& meta = *cut.axis;
    if (meta.axis >= dims) {
      throw Error(ErrorCode::kBadParams, "cut " + std::to_string(cut.id) + " refers to axis " +
                                             std::to_string(meta.axis));
    }
    const bool below = (side.direction == Direction::kA) == meta.side_a_below;
    Interval& interval = box[meta.axis];
    if (below) {
      interval.upper = std::min(interval.upper, meta.threshold);
    } else {
      interval.lower = std::max(interval.lower, meta.threshold);
    }
  }
  return box;
}

}  // namespace tangles
