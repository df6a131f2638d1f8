#include <gtest/gtest.h>

#include <stdexcept>

#include "bss/partition.hpp"

using bss::Partition;

TEST(Partition, CanonicalBlockOrder) {
  const Partition p(4, {{3, 1}, {2}, {0}});
  EXPECT_EQ(p.blocks(), (std::vector<std::vector<std::size_t>>{{0}, {1, 3}, {2}}));
  EXPECT_TRUE(p.related(1, 3));
  EXPECT_FALSE(p.related(0, 1));
  EXPECT_EQ(p, Partition::from_keys(std::vector<std::size_t>{7, 4, 9, 4}));
}

TEST(Partition, RejectsInvalidBlocks) {
  EXPECT_THROW(Partition(2, {{0}}), std::invalid_argument);
  EXPECT_THROW(Partition(2, {{0, 1}, {1}}), std::invalid_argument);
  EXPECT_THROW(Partition(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Partition(1, {{0}, {}}), std::invalid_argument);
}

TEST(Partition, RefinementAndMeet) {
  const auto a = Partition::from_keys(std::vector<std::size_t>{0, 0, 1, 1});
  const auto b = Partition::from_keys(std::vector<std::size_t>{0, 1, 1, 1});
  const auto m = a.meet(b);
  EXPECT_EQ(m, Partition::from_keys(std::vector<std::size_t>{0, 1, 2, 2}));
  EXPECT_TRUE(m.refines(a));
  EXPECT_TRUE(m.refines(b));
  EXPECT_FALSE(a.refines(b));
  EXPECT_TRUE(Partition::discrete(4).refines(a));
  EXPECT_TRUE(a.refines(Partition::universal(4)));
  EXPECT_EQ(Partition::universal(4).block_count(), 1u);
}

TEST(Partition, Rendering) {
  bss::Universe u{"m1", "m2", "m3"};
  EXPECT_EQ(Partition::from_keys(std::vector<std::size_t>{0, 1, 0}).to_string(u), "{m1,m3} {m2}");
}
