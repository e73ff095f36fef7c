#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <numeric>
#include <set>
#include <vector>

#include "tangles/error.hpp"
#include "tangles/eval.hpp"
#include "tangles/models.hpp"
#include "tangles/pipeline.hpp"
#include "tangles/postprocess.hpp"
#include "test_util.hpp"

namespace tangles {
namespace {

using testing::cut_from;
using testing::random_pool;

std::shared_ptr<const CutPool> pool_of(std::size_t n, std::size_t m, std::uint64_t seed) {
  return std::make_shared<const CutPool>(random_pool(n, m, seed));
}

// Appends `length` nodes below `from`, all oriented toward side A except the
// first step, which uses `first`.
std::size_t add_path(TangleSearchTree& tree, std::size_t from, Direction first,
                     std::size_t length) {
  std::size_t v = from;
  for (std::size_t i = 0; i < length; ++i) {
    v = tree.add_child(v, i == 0 ? first : Direction::kA);
  }
  return v;
}

bool same_tree(const TangleSearchTree& x, const TangleSearchTree& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t id = 0; id < x.size(); ++id) {
    const auto& a = x.node(id);
    const auto& b = y.node(id);
    if (a.parent != b.parent || a.children != b.children || a.level != b.level ||
        a.core != b.core || a.maximal != b.maximal) {
      return false;
    }
    if (a.oriented.has_value() != b.oriented.has_value()) return false;
    if (a.oriented && !(*a.oriented == *b.oriented)) return false;
  }
  return true;
}

std::vector<std::vector<Direction>> leaf_orientations(const TangleSearchTree& tree) {
  std::vector<std::vector<Direction>> out;
  for (std::size_t leaf : tree.leaves()) out.push_back(tree.orientation(leaf));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Prune, DepthZeroIsIdentity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto tree = build_tree(pool_of(30, 10, seed), 3);
    EXPECT_TRUE(same_tree(prune_tree(tree, 0), tree));
  }
}

TEST(Prune, ShortBranchRemovedLongBranchKept) {
  TangleSearchTree tree(pool_of(12, 6, 1), 1);
  add_path(tree, 0, Direction::kA, 1);
  const std::size_t long_leaf = add_path(tree, 0, Direction::kComplement, 5);
  const auto expected = tree.orientation(long_leaf);

  const auto pruned = prune_tree(tree, 1);
  EXPECT_EQ(pruned.size(), 6U);
  ASSERT_EQ(pruned.leaves().size(), 1U);
  EXPECT_EQ(pruned.orientation(pruned.leaves()[0]), expected);
  EXPECT_EQ(pruned.node(0).num_children(), 1U);

  // A depth of 5 reaches the root through the long branch as well.
  EXPECT_EQ(prune_tree(tree, 5).size(), 1U);
}

TEST(Prune, RemovesAllShortBranchesOfARoundTogether) {
  TangleSearchTree tree(pool_of(12, 6, 2), 1);
  add_path(tree, 0, Direction::kA, 1);
  add_path(tree, 0, Direction::kComplement, 1);
  EXPECT_EQ(prune_tree(tree, 1).size(), 1U);
  EXPECT_EQ(prune_tree(tree, 0).size(), 3U);
}

TEST(Prune, CascadesAfterSplitDisappears) {
  // root -> x (len 2) -> split into two length-1 leaves; plus a length-4 branch.
  TangleSearchTree tree(pool_of(12, 6, 3), 1);
  const std::size_t x = add_path(tree, 0, Direction::kA, 2);
  add_path(tree, x, Direction::kA, 1);
  add_path(tree, x, Direction::kComplement, 1);
  const std::size_t far = add_path(tree, 0, Direction::kComplement, 4);
  // Round one removes both leaves below x; round two sees x as a length-2
  // leaf branch, which depth 1 keeps.
  const auto once = prune_tree(tree, 1);
  EXPECT_EQ(once.leaves().size(), 2U);
  EXPECT_EQ(once.size(), tree.size() - 2);
  // Depth 2 removes the x branch too.
  const auto twice = prune_tree(tree, 2);
  ASSERT_EQ(twice.leaves().size(), 1U);
  EXPECT_EQ(twice.orientation(twice.leaves()[0]), tree.orientation(far));
}

TEST(Prune, Idempotent) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto tree = build_tree(pool_of(40, 12, seed), 2 + seed % 4);
    for (std::size_t depth : {1U, 2U, 3U}) {
      const auto once = prune_tree(tree, depth);
      EXPECT_TRUE(same_tree(prune_tree(once, depth), once)) << seed << " " << depth;
    }
  }
}

TEST(Prune, SurvivingLeafBranchesAreLongerThanDepth) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto tree = build_tree(pool_of(40, 12, seed), 3);
    const auto pruned = prune_tree(tree, 2);
    for (std::size_t leaf : pruned.leaves()) {
      if (leaf == 0) continue;
      std::size_t length = 0;
      std::size_t v = leaf;
      do {
        ++length;
        v = *pruned.node(v).parent;
      } while (v != 0 && pruned.node(v).num_children() < 2);
      EXPECT_GT(length, 2U);
    }
  }
}

TEST(Condense, PathBecomesRootAndLeaf) {
  TangleSearchTree tree(pool_of(10, 5, 4), 1);
  add_path(tree, 0, Direction::kComplement, 5);
  const auto condensed = condense(tree);
  ASSERT_EQ(condensed.size(), 2U);
  EXPECT_EQ(condensed.node(0).kind, NodeKind::kRoot);
  EXPECT_EQ(condensed.node(1).kind, NodeKind::kLeaf);
  EXPECT_EQ(condensed.node(1).search_node, 5U);
}

TEST(Condense, PreservesLeaves) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto tree = build_tree(pool_of(40, 12, seed), 2 + seed % 3);
    const auto condensed = condense(tree);
    std::set<std::size_t> expected;
    for (std::size_t leaf : tree.leaves()) expected.insert(leaf);
    std::set<std::size_t> got;
    for (std::size_t leaf : condensed.leaves()) got.insert(condensed.node(leaf).search_node);
    if (tree.size() == 1) {
      EXPECT_EQ(condensed.size(), 1U);
      continue;
    }
    EXPECT_EQ(got, expected);
    for (const auto& node : condensed.nodes()) {
      if (node.kind == NodeKind::kSplitting) {
        EXPECT_EQ(tree.node(node.search_node).num_children(), 2U);
        EXPECT_EQ(node.children.size(), 2U);
      }
      if (node.parent) EXPECT_LT(*node.parent, node.id);
    }
  }
}

TEST(Condense, HandBuiltDendrogram) {
  // Root path of two cuts, split A at level 2; the right subtree splits again
  // (node B) at level 4, the left subtree is a single chain.
  const auto pool = pool_of(20, 7, 5);
  TangleSearchTree tree(pool, 1);
  const std::size_t a = add_path(tree, 0, Direction::kA, 2);
  const std::size_t b = add_path(tree, a, Direction::kA, 2);
  add_path(tree, b, Direction::kA, 3);
  add_path(tree, b, Direction::kComplement, 3);
  add_path(tree, a, Direction::kComplement, 5);
  const auto condensed = condense(tree);
  ASSERT_EQ(condensed.size(), 6U);
  EXPECT_EQ(condensed.node(0).children.size(), 1U);
  EXPECT_EQ(condensed.node(1).search_node, a);
  EXPECT_EQ(condensed.node(1).kind, NodeKind::kSplitting);
  EXPECT_EQ(condensed.node(2).search_node, b);
  EXPECT_EQ(condensed.node(2).kind, NodeKind::kSplitting);
  EXPECT_EQ(condensed.leaves().size(), 3U);
  EXPECT_DOUBLE_EQ(condensed.height(1), (*pool)[2].cost);
  EXPECT_DOUBLE_EQ(condensed.height(2), (*pool)[4].cost);
}

TEST(DistinguishingCuts, SingleDifferingCut) {
  // Two leaves that agree on every cut except P5 (position 4).
  TangleSearchTree tree(pool_of(10, 7, 6), 1);
  const std::size_t split = add_path(tree, 0, Direction::kA, 4);
  std::size_t right = tree.add_child(split, Direction::kA);
  std::size_t left = tree.add_child(split, Direction::kComplement);
  for (int i = 0; i < 2; ++i) {
    right = tree.add_child(right, Direction::kComplement);
    left = tree.add_child(left, Direction::kComplement);
  }
  const auto cuts = distinguishing_cuts(tree, split);
  ASSERT_EQ(cuts.size(), 1U);
  EXPECT_EQ(cuts[0].cut, 4U);
  EXPECT_EQ(cuts[0].right, Direction::kA);
}

TEST(DistinguishingCuts, WorkedExampleShape) {
  // Split at level 2 (cut P3). Right subtree: P3 A, P4 A, then a split at P5
  // whose leaves both orient P6 A and P7 complement. Left subtree: one leaf
  // with P3 c, P4 c, P5 A, P6 A, P7 A. Distinguishing: P3, P4, P7.
  TangleSearchTree tree(pool_of(12, 7, 7), 1);
  const std::size_t split = add_path(tree, 0, Direction::kA, 2);
  const std::size_t r = add_path(tree, split, Direction::kA, 2);
  const std::size_t r1 = tree.add_child(r, Direction::kA);
  const std::size_t r2 = tree.add_child(r, Direction::kComplement);
  for (std::size_t leaf : {r1, r2}) {
    const std::size_t p6 = tree.add_child(leaf, Direction::kA);
    tree.add_child(p6, Direction::kComplement);
  }
  std::size_t l = tree.add_child(split, Direction::kComplement);
  l = tree.add_child(l, Direction::kComplement);
  add_path(tree, l, Direction::kA, 3);
  const auto cuts = distinguishing_cuts(tree, split);
  const std::vector<DistinguishingCut> expected{
      {2, Direction::kA}, {3, Direction::kA}, {6, Direction::kComplement}};
  EXPECT_EQ(cuts, expected);
}

TEST(DistinguishingCuts, MatchesExhaustiveScan) {
  std::size_t splits_checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto tree = build_tree(pool_of(40, 12, seed), 2 + seed % 3);
    for (std::size_t id = 0; id < tree.size(); ++id) {
      const auto& node = tree.node(id);
      if (node.num_children() != 2) continue;
      ++splits_checked;
      std::vector<std::vector<Direction>> right, left;
      std::vector<std::size_t> stack{*node.children[0]};
      for (int side = 0; side < 2; ++side) {
        stack = {*node.children[side]};
        while (!stack.empty()) {
          const std::size_t v = stack.back();
          stack.pop_back();
          if (tree.node(v).is_leaf()) {
            (side == 0 ? right : left).push_back(tree.orientation(v));
          }
          for (const auto& c : tree.node(v).children) {
            if (c) stack.push_back(*c);
          }
        }
      }
      std::vector<DistinguishingCut> expected;
      for (std::size_t cut = 0; cut < tree.pool().size(); ++cut) {
        bool all_pairs_differ = true;
        for (const auto& x : right) {
          for (const auto& y : left) {
            all_pairs_differ = all_pairs_differ && cut < x.size() && cut < y.size() &&
                               x[cut] != y[cut];
          }
        }
        // Every right leaf must also orient it the same way.
        bool right_agree = true;
        for (const auto& x : right) {
          right_agree = right_agree && cut < x.size() && x[cut] == right.front()[cut];
        }
        if (all_pairs_differ && right_agree) expected.push_back({cut, right.front()[cut]});
      }
      EXPECT_EQ(distinguishing_cuts(tree, id), expected);
    }
  }
  EXPECT_GT(splits_checked, 20U);
}

TEST(BranchProbabilities, Examples) {
  std::vector<Bipartition> cuts{cut_from("1100", 0), cut_from("1010", 1), cut_from("1001", 2),
                                cut_from("1110", 3)};
  const CutPool pool(4, cuts);
  // Object 0 lies on every side A.
  const std::vector<DistinguishingCut> all{
      {0, Direction::kA}, {1, Direction::kA}, {2, Direction::kA}, {3, Direction::kA}};
  const auto p = branch_probabilities(pool, all, WeightingFn::uniform());
  EXPECT_DOUBLE_EQ(p[0], 1.0);
  // Object 1 is on side A of cuts 0 and 3 only.
  EXPECT_DOUBLE_EQ(p[1], 0.5);
  EXPECT_THROW(branch_probabilities(pool, {}, WeightingFn::uniform()), Error);
  const WeightingFn zero{[](double) { return 0.0; }};
  EXPECT_THROW(branch_probabilities(pool, all, zero), Error);
}

TEST(BranchProbabilities, CostWeightedAverage) {
  std::vector<Bipartition> cuts{cut_from("1100", 0), cut_from("1010", 1), cut_from("1000", 2)};
  cuts[0].cost = 0.5;
  cuts[1].cost = 1.25;
  cuts[2].cost = 3.0;
  const CutPool pool(4, cuts);
  const double c_max = 3.0;
  const WeightingFn h{[c_max](double c) { return std::exp(-c / c_max); }};
  const std::vector<DistinguishingCut> set{
      {0, Direction::kA}, {1, Direction::kComplement}, {2, Direction::kA}};
  const auto p = branch_probabilities(pool, set, h);
  const long double w0 = std::exp(-0.5L / 3.0L), w1 = std::exp(-1.25L / 3.0L),
                    w2 = std::exp(-1.0L);
  const long double total = w0 + w1 + w2;
  // Sides: cut0 A = {0,1}; cut1 complement = {1,3}; cut2 A = {0}.
  EXPECT_NEAR(p[0], static_cast<double>((w0 + w2) / total), 1e-15);
  EXPECT_NEAR(p[1], static_cast<double>((w0 + w1) / total), 1e-15);
  EXPECT_NEAR(p[2], 0.0, 1e-15);
  EXPECT_NEAR(p[3], static_cast<double>(w1 / total), 1e-15);
}

TEST(WeightingFn, Exponential) {
  const auto h = WeightingFn::exponential(2.0, 1.0);
  EXPECT_DOUBLE_EQ(h(1.0), 1.0);
  EXPECT_DOUBLE_EQ(h(2.0), std::exp(-2.0));
  EXPECT_THROW(WeightingFn::exponential(-1.0, 0.0), Error);
}

CondensedTree annotated(const TangleSearchTree& tree) {
  auto condensed = condense(tree);
  annotate(condensed, WeightingFn::uniform());
  return condensed;
}

TEST(SoftAssignments, RootSelectionIsAllOnes) {
  const auto tree = annotated(build_tree(pool_of(30, 10, 3), 3));
  const auto soft = soft_assignments(tree, std::vector<std::size_t>{0});
  ASSERT_EQ(soft.cols, 1U);
  for (std::size_t r = 0; r < soft.rows; ++r) EXPECT_EQ(soft.at(r, 0), 1.0);
}

TEST(SoftAssignments, SingleSplitRowsAreBranchProbabilities) {
  std::vector<Bipartition> cuts{cut_from("111000", 0), cut_from("110000", 1),
                                cut_from("111100", 2)};
  auto pool = std::make_shared<const CutPool>(6, cuts);
  TangleSearchTree tree(pool, 1);
  const std::size_t right = tree.add_child(0, Direction::kA);
  const std::size_t left = tree.add_child(0, Direction::kComplement);
  tree.add_child(tree.add_child(right, Direction::kA), Direction::kA);
  tree.add_child(tree.add_child(left, Direction::kComplement), Direction::kComplement);
  const auto condensed = annotated(tree);
  const auto soft = soft_assignments(condensed);
  ASSERT_EQ(soft.cols, 2U);
  const auto& split = condensed.node(0);
  const auto direct = branch_probabilities(*pool, split.distinguishing, WeightingFn::uniform());
  ASSERT_EQ(split.distinguishing.size(), 3U);
  for (std::size_t r = 0; r < 6; ++r) {
    EXPECT_DOUBLE_EQ(soft.at(r, 0), direct[r]);
    EXPECT_DOUBLE_EQ(soft.at(r, 1), 1.0 - direct[r]);
  }
  // Object 2 is on the right side of cuts 0 and 2 but not 1.
  EXPECT_DOUBLE_EQ(direct[2], 2.0 / 3.0);
}

TEST(SoftAssignments, NestedSplitsMultiplyAlongThePath) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto tree = build_tree(pool_of(40, 12, seed), 3);
    const auto condensed = annotated(tree);
    const auto soft = soft_assignments(condensed);
    for (std::size_t c = 0; c < soft.cols; ++c) {
      std::vector<double> expected(soft.rows, 1.0);
      std::size_t v = soft.node_ids[c];
      while (condensed.node(v).parent) {
        const std::size_t parent = *condensed.node(v).parent;
        const auto& pn = condensed.node(parent);
        if (pn.children.size() == 2) {
          const bool is_right = pn.children[0] == v;
          for (std::size_t r = 0; r < soft.rows; ++r) {
            expected[r] *= is_right ? pn.p_right[r] : 1.0 - pn.p_right[r];
          }
        }
        v = parent;
      }
      for (std::size_t r = 0; r < soft.rows; ++r) {
        EXPECT_NEAR(soft.at(r, c), expected[r], 1e-12);
      }
    }
  }
}

TEST(SoftAssignments, RowsSumToOneForEveryValidSelection) {
  std::size_t trees_with_splits = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto condensed = annotated(prune_tree(build_tree(pool_of(50, 12, seed), 3), 1));
    if (condensed.leaves().size() > 1) ++trees_with_splits;
    // Leaves, the root, and each split together with the leaves outside it.
    std::vector<std::vector<std::size_t>> selections{condensed.leaves(), {0}};
    for (const auto& node : condensed.nodes()) {
      if (node.kind != NodeKind::kSplitting) continue;
      std::vector<std::size_t> selection{node.id};
      for (std::size_t leaf : condensed.leaves()) {
        bool below = false;
        for (std::optional<std::size_t> v = leaf; v; v = condensed.node(*v).parent) {
          below = below || *v == node.id;
        }
        if (!below) selection.push_back(leaf);
      }
      selections.push_back(selection);
    }
    for (const auto& selection : selections) {
      const auto soft = soft_assignments(condensed, selection);
      for (std::size_t r = 0; r < soft.rows; ++r) {
        const auto row = soft.row(r);
        EXPECT_NEAR(std::accumulate(row.begin(), row.end(), 0.0), 1.0, 1e-9);
      }
    }
    for (const auto& node : condensed.nodes()) {
      for (double p : node.p_right) {
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
      }
    }
  }
  EXPECT_GT(trees_with_splits, 10U);
}

TEST(SoftAssignments, InvalidSelections) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 20 && checked < 5; ++seed) {
    const auto condensed = annotated(build_tree(pool_of(40, 12, seed), 3));
    const auto leaves = condensed.leaves();
    if (leaves.size() < 2) continue;
    ++checked;
    auto with_root = leaves;
    with_root.push_back(0);
    EXPECT_THROW(soft_assignments(condensed, with_root), Error);
    EXPECT_THROW(soft_assignments(condensed, std::vector<std::size_t>{leaves[0]}), Error);
    EXPECT_THROW(soft_assignments(condensed, std::vector<std::size_t>{}), Error);
    EXPECT_THROW(soft_assignments(condensed, std::vector<std::size_t>{condensed.size()}), Error);
  }
  EXPECT_GT(checked, 0U);
}

TEST(HardAssignments, ArgmaxWithLowestColumnOnTies) {
  SoftMatrix one{3, 1, {0.1, 0.9, 1.0}, {0}};
  EXPECT_EQ(hard_assignments(one), (std::vector<int>{0, 0, 0}));
  SoftMatrix pair{2, 2, {0.2, 0.8, 0.5, 0.5}, {1, 2}};
  EXPECT_EQ(hard_assignments(pair), (std::vector<int>{1, 0}));
  SoftMatrix triple{1, 3, {0.25, 0.375, 0.375}, {1, 2, 3}};
  EXPECT_EQ(hard_assignments(triple), (std::vector<int>{1}));
}

TEST(HardAssignments, InvariantUnderIncreasingRescaling) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    SoftMatrix soft{5, 4, std::vector<double>(20), {0, 1, 2, 3}};
    for (double& v : soft.values) v = static_cast<double>(rng.below(4)) / 4.0;
    SoftMatrix scaled = soft;
    for (double& v : scaled.values) v = std::exp(3.0 * v) + 7.0;
    EXPECT_EQ(hard_assignments(soft), hard_assignments(scaled));
  }
}

TEST(Pipeline, NoiselessMindsetsRecoveredExactly) {
  for (std::size_t k : {2U, 3U, 4U}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto inst = gen_mindsets(120, 20, k, 0.0, seed);
      if (!check_nondegeneracy(inst.mindsets)) continue;
      ClusterOptions options;
      options.agreement = 120 / k / 3;
      const auto result = cluster_answers(inst.answers, {}, options);
      EXPECT_DOUBLE_EQ(nmi(result.labels, inst.labels), 1.0) << "k=" << k << " seed=" << seed;
      EXPECT_EQ(result.tangle_count(), k);
    }
  }
}

TEST(CoreIntervals, MostRestrictiveThresholdWins) {
  // Points on a line at 0..9; cuts x < 5 and x < 2, both oriented to x >= t.
  std::vector<double> xs(10);
  std::iota(xs.begin(), xs.end(), 0.0);
  std::vector<Bipartition> cuts;
  for (double t : {4.5, 1.5}) {
    BitVec below(10);
    for (std::size_t i = 0; i < 10; ++i) below.set(i, xs[i] < t);
    Bipartition cut = make_cut(below, static_cast<int>(cuts.size()));
    cut.cost = static_cast<double>(cuts.size());
    cut.axis = AxisCutMeta{0, t, cut.side_a.test(0) == below.test(0)};
    cuts.push_back(cut);
  }
  auto pool = std::make_shared<const CutPool>(10, cuts);
  TangleSearchTree tree(pool, 1);
  // Side A holds object 0, i.e. the below side; the complement is x >= t.
  const std::size_t v = tree.add_child(tree.add_child(0, Direction::kComplement),
                                       Direction::kComplement);
  const auto box = core_intervals(tree, v, 2);
  EXPECT_DOUBLE_EQ(box[0].lower, 4.5);
  EXPECT_EQ(box[0].upper, std::numeric_limits<double>::infinity());
  EXPECT_EQ(box[1].lower, -std::numeric_limits<double>::infinity());
  EXPECT_EQ(box[1].upper, std::numeric_limits<double>::infinity());

  const std::size_t w = tree.add_child(tree.add_child(0, Direction::kA), Direction::kA);
  const auto box2 = core_intervals(tree, w, 1);
  EXPECT_DOUBLE_EQ(box2[0].upper, 1.5);
}

TEST(CoreIntervals, RequiresAxisMetadata) {
  TangleSearchTree tree(pool_of(10, 3, 1), 1);
  const std::size_t v = tree.add_child(0, Direction::kA);
  EXPECT_THROW(core_intervals(tree, v, 2), Error);
}

TEST(CoreIntervals, EachGaussianCenterInItsTangleBox) {
  const std::vector<double> centers{0.0, 0.0, 8.0, 0.0, 0.0, 8.0};
  const auto inst = gen_gmm(centers, 2, 1.0, 900, 12);
  ClusterOptions options;
  options.agreement = 100;
  CutOptions cuts;
  cuts.source = CutSource::kAxisSlices;
  const auto result = cluster_points(inst.points, cuts, options);
  const auto leaves = result.condensed->leaves();
  ASSERT_EQ(leaves.size(), 3U);
  std::set<std::size_t> matched;
  for (std::size_t leaf : leaves) {
    const auto box =
        core_intervals(result.condensed->search_tree(), result.condensed->node(leaf).search_node, 2);
    std::size_t inside = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      if (box[0].contains(centers[2 * c]) && box[1].contains(centers[2 * c + 1])) {
        ++inside;
        matched.insert(c);
      }
    }
    EXPECT_EQ(inside, 1U);
  }
  EXPECT_EQ(matched.size(), 3U);
}

}  // namespace
}  // namespace tangles
