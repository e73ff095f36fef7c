#include <gtest/gtest.h>

#include <vector>

#include "tangles/bitvec.hpp"
#include "tangles/cut.hpp"
#include "tangles/error.hpp"
#include "tangles/random.hpp"
#include "test_util.hpp"

namespace tangles {
namespace {

TEST(BitVec, StringRoundTrip) {
  const auto bits = BitVec::from_string("0110100");
  EXPECT_EQ(bits.size(), 7U);
  EXPECT_EQ(bits.count(), 3U);
  EXPECT_EQ(bits.to_string(), "0110100");
  EXPECT_EQ(bits.indices(), (std::vector<std::size_t>{1, 2, 4}));
}

TEST(BitVec, ComplementKeepsTailClear) {
  for (std::size_t n : {1, 63, 64, 65, 130}) {
    BitVec empty(n);
    const BitVec full = empty.complement();
    EXPECT_EQ(full.count(), n);
    EXPECT_TRUE(full.all());
    EXPECT_EQ(full.complement().count(), 0U);
  }
}

TEST(BitVec, SubsetAndIntersections) {
  const auto a = BitVec::from_string("1110");
  const auto b = BitVec::from_string("0111");
  const auto c = BitVec::from_string("0100");
  EXPECT_TRUE(c.is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(intersection_count(a, b), 2U);
  EXPECT_EQ(intersection_count(a, b, c), 1U);
  EXPECT_TRUE(intersection_at_least(a, b, c, 1));
  EXPECT_FALSE(intersection_at_least(a, b, c, 2));
  EXPECT_TRUE(intersection_at_least(a, b, c, 0));
}

TEST(BitVec, CountsMatchNaiveOnLongVectors) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.below(300);
    BitVec a(n), b(n), c(n);
    std::size_t naive = 0;
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, rng.bernoulli(0.7));
      b.set(i, rng.bernoulli(0.7));
      c.set(i, rng.bernoulli(0.7));
      naive += a.test(i) && b.test(i) && c.test(i);
    }
    EXPECT_EQ(intersection_count(a, b, c), naive);
    EXPECT_EQ(intersection_at_least(a, b, c, naive), true);
    EXPECT_EQ(intersection_at_least(a, b, c, naive + 1), false);
  }
}

TEST(MakeCut, CanonicalSideHoldsObjectZero) {
  const auto cut = make_cut(BitVec::from_string("0101"), 0);
  EXPECT_EQ(cut.size_a(), 2U);
  EXPECT_TRUE(cut.side_a.test(0));
  EXPECT_EQ(cut.side_a.to_string(), "1010");
}

TEST(MakeCut, ConstantMembershipIsEmptySide) {
  try {
    make_cut(BitVec::from_string("1111"), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySide);
  }
  EXPECT_THROW(make_cut(BitVec::from_string("0000"), 0), Error);
}

TEST(MakeCut, ComplementGivesSameCut) {
  const auto a = make_cut(BitVec::from_string("0101"), 3);
  const auto b = make_cut(BitVec::from_string("1010"), 3);
  EXPECT_EQ(a.side_a, b.side_a);
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    BitVec m(17);
    for (std::size_t i = 0; i < 17; ++i) m.set(i, rng.bernoulli(0.5));
    if (m.none() || m.all()) continue;
    EXPECT_EQ(make_cut(m, 0).side_a, make_cut(m.complement(), 0).side_a);
  }
}

TEST(MakeCut, LengthChecked) {
  try {
    make_cut(BitVec::from_string("0101"), 0, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
}

TEST(Bipartition, SidesAndContains) {
  const auto cut = make_cut(BitVec::from_string("1100"), 0);
  EXPECT_EQ(cut.side(Direction::kComplement).to_string(), "0011");
  EXPECT_TRUE(cut.contains(0, Direction::kA));
  EXPECT_TRUE(cut.contains(3, Direction::kComplement));
  EXPECT_FALSE(cut.contains(3, Direction::kA));
}

TEST(CutPool, SortsByCostThenId) {
  std::vector<Bipartition> cuts;
  cuts.push_back(testing::cut_from("1100", 0));
  cuts.push_back(testing::cut_from("1010", 1));
  cuts.push_back(testing::cut_from("1001", 2));
  cuts[0].cost = 2.0;
  cuts[1].cost = 1.0;
  cuts[2].cost = 1.0;
  const CutPool pool(4, cuts);
  EXPECT_EQ(pool[0].id, 1);
  EXPECT_EQ(pool[1].id, 2);
  EXPECT_EQ(pool[2].id, 0);
  EXPECT_EQ(pool.position_of(0), 2U);
  EXPECT_FALSE(pool.position_of(9).has_value());
  EXPECT_EQ(pool.prefix(1.0).size(), 2U);
  EXPECT_EQ(pool.prefix(0.5).size(), 0U);
}

TEST(CutPool, RejectsInvalidCuts) {
  std::vector<Bipartition> wrong_size{testing::cut_from("110", 0)};
  EXPECT_THROW(CutPool(4, wrong_size), Error);
  auto negative = testing::cut_from("1100", 0);
  negative.cost = -1.0;
  EXPECT_THROW(CutPool(4, {negative}), Error);
}

}  // namespace
}  // namespace tangles
