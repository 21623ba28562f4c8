#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "coboundary/weights.hpp"

using namespace coboundary;
using namespace coboundary::weights;

namespace {

Weight gl(std::vector<int> c) { return {CartanContext::gl(static_cast<int>(c.size())), std::move(c)}; }
Weight sp(std::vector<int> c) { return {CartanContext::sp(static_cast<int>(c.size())), std::move(c)}; }

}  // namespace

TEST(Dominant, Examples) {
  EXPECT_EQ(dom_w(gl({1, 2, 1, 0})), gl({2, 1, 1, 0}));
  EXPECT_EQ(dom_w(sp({-1, 2})), sp({2, 1}));
  EXPECT_EQ(dom_w(gl({3, 1, 0})), gl({3, 1, 0}));
  EXPECT_TRUE(is_dominant(gl({2, 1, 1})));
  EXPECT_FALSE(is_dominant(gl({1, 2, 0})));
  EXPECT_FALSE(is_dominant(sp({1, -1})));
  EXPECT_TRUE(is_dominant(Weight{CartanContext::sl2(), {0}}));
  EXPECT_FALSE(is_dominant(Weight{CartanContext::sl2(), {-1}}));
}

TEST(Dominant, ConstantOnOrbits) {
  for (int rank = 1; rank <= 4; ++rank) {
    for (auto ctx : {CartanContext::gl(rank), CartanContext::sp(rank)}) {
      std::vector<int> c(static_cast<std::size_t>(rank), -3);
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == c.size()) {
          const Weight w{ctx, c};
          const Weight d = dom_w(w);
          EXPECT_TRUE(is_dominant(d));
          EXPECT_EQ(dom_w(d), d);
          for (const auto& v : weyl_orbit(w)) EXPECT_EQ(dom_w(v), d);
          return;
        }
        for (int x = -3; x <= 3; ++x) {
          c[k] = x;
          rec(k + 1);
        }
      };
      if (rank <= 3) rec(0);
    }
  }
}

TEST(Partition, Strips) {
  EXPECT_TRUE(strip_check({3}, {4, 1}, Strip::Horizontal));
  EXPECT_TRUE(strip_check({1, 1, 1}, {2, 1, 1, 1}, Strip::Vertical));
  EXPECT_FALSE(strip_check({1}, {3, 1}, Strip::Vertical));
  EXPECT_FALSE(strip_check({2}, {1, 1}, Strip::Horizontal));
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition{4, 2, 1}), (Partition{3, 2, 1, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : partitions_of(n)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Partition, TrailingZerosIgnored) {
  EXPECT_EQ((Partition{2, 1, 0, 0}), (Partition{2, 1}));
  EXPECT_EQ(to_partition(gl({2, 1, 1, 0})), (Partition{2, 1, 1}));
  EXPECT_THROW(to_partition(gl({1, 2})), Error);
  EXPECT_THROW(from_partition(CartanContext::gl(2), {1, 1, 1}), Error);
}

TEST(Partition, CountsOfPartitions) {
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n < 9; ++n) EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]);
}

TEST(Weights, Pairing) {
  const auto ctx = CartanContext::sp(2);
  EXPECT_EQ(pairing(Weight{ctx, {2, 1}}, 1), 1);
  EXPECT_EQ(pairing(Weight{ctx, {2, 1}}, 2), 1);
  EXPECT_EQ(simple_root(ctx, 2), (Weight{ctx, {0, 2}}));
  EXPECT_THROW(simple_root(ctx, 3), Error);
}

TEST(Weights, Formatting) {
  EXPECT_EQ(gl({2, 1, 0}).to_string(), "[2,1]");
  EXPECT_EQ(gl({0, 0}).to_string(), "[]");
  EXPECT_EQ(family_from_string("Sp"), Family::Sp);
  EXPECT_THROW(family_from_string("E8"), Error);
}
