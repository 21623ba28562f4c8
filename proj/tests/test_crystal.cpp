#include <gtest/gtest.h>

#include <set>

#include "coboundary/crystal.hpp"

using namespace coboundary;
using namespace coboundary::crystal;
using weights::CartanContext;
using weights::Weight;

namespace {

Crystal sl2() { return build_minuscule(CartanContext::sl2(), Minuscule::sl2()); }

std::vector<Crystal> all_bases() {
  return {sl2(),
          build_minuscule(CartanContext::gl(2), Minuscule::vector()),
          build_minuscule(CartanContext::gl(3), Minuscule::vector()),
          build_minuscule(CartanContext::gl(3), Minuscule::exterior(2)),
          build_minuscule(CartanContext::gl(4), Minuscule::exterior(2)),
          build_minuscule(CartanContext::sp(2), Minuscule::vector()),
          build_minuscule(CartanContext::sp(3), Minuscule::vector())};
}

// Brute-force e-ascent to the top of every e-string.
bool brute_hw(const Crystal& c, Element x) {
  for (int i = 1; i <= c.num_indices(); ++i)
    if (c.e(i, x) != kNone) return false;
  return true;
}

}  // namespace

TEST(Crystal, SL2Doublet) {
  const auto c = sl2();
  const Element plus = *c.find("+");
  const Element minus = *c.find("-");
  EXPECT_EQ(c.f(1, plus), minus);
  EXPECT_EQ(c.eps(1, plus), 0);
  EXPECT_EQ(c.phi(1, plus), 1);
  EXPECT_TRUE(c.is_highest_weight(plus));
}

TEST(Crystal, GL3Vector) {
  const auto c = build_minuscule(CartanContext::gl(3), Minuscule::vector());
  const Element two = *c.find("2");
  EXPECT_EQ(c.eps(1, two), 1);
  EXPECT_EQ(c.phi(2, two), 1);
}

TEST(Crystal, MinusculeSizesAndWeights) {
  EXPECT_EQ(build_minuscule(CartanContext::gl(3), Minuscule::exterior(2)).size(), 3u);
  const auto sp = build_minuscule(CartanContext::sp(2), Minuscule::vector());
  ASSERT_EQ(sp.size(), 4u);
  std::set<std::vector<int>> wts;
  for (Element x = 0; x < sp.size(); ++x) wts.insert(sp.weight(x).coords);
  EXPECT_EQ(wts, (std::set<std::vector<int>>{{1, 0}, {0, 1}, {0, -1}, {-1, 0}}));
  EXPECT_THROW(build_minuscule(CartanContext::gl(2), Minuscule::exterior(3)), Error);
  EXPECT_THROW(build_minuscule(CartanContext::sp(2), Minuscule::exterior(2)), Error);
}

TEST(Crystal, WeylGroupTransitiveOnWeights) {
  for (const auto& c : all_bases()) {
    const auto orbit = weights::weyl_orbit(c.weight(0));
    std::set<std::vector<int>> o;
    for (const auto& w : orbit) o.insert(w.coords);
    for (Element x = 0; x < c.size(); ++x) EXPECT_TRUE(o.count(c.weight(x).coords)) << c.context().to_string();
  }
}

TEST(Crystal, AdjointnessAndWeightShift) {
  for (const auto& base : all_bases()) {
    const TensorPower tp(base, 3);
    const auto& c = tp.crystal();
    for (Element x = 0; x < c.size(); ++x) {
      for (int i = 1; i <= c.num_indices(); ++i) {
        const Element y = c.f(i, x);
        if (y != kNone) {
          EXPECT_EQ(c.e(i, y), x);
          EXPECT_EQ(c.weight(x), c.weight(y) + weights::simple_root(c.context(), i));
        }
        EXPECT_EQ(c.phi(i, x) - c.eps(i, x), weights::pairing(c.weight(x), i));
      }
    }
  }
}

TEST(Crystal, RejectsCycles) {
  const auto ctx = CartanContext::sl2();
  std::vector<std::vector<Element>> up = {{1, 0}};
  EXPECT_THROW(Crystal(ctx, up, {Weight{ctx, {1}}, Weight{ctx, {-1}}}, {"a", "b"}), Error);
}

TEST(Tensor, SL2Rule) {
  const auto b = sl2();
  const auto bb = tensor(b, b);
  const Element mm = *bb.find("-⊗-");
  EXPECT_EQ(bb.label(bb.e(1, mm)), "-⊗+");
  std::set<std::string> hw;
  for (auto x : highest_weight_elements(bb)) hw.insert(bb.label(x));
  EXPECT_EQ(hw, (std::set<std::string>{"+⊗+", "+⊗-"}));
}

TEST(Tensor, HighestWeightCharacterization) {
  for (const auto& base : all_bases()) {
    const auto sq = tensor(base, base);
    for (Element x = 0; x < base.size(); ++x) {
      for (Element y = 0; y < base.size(); ++y) {
        bool expected = base.is_highest_weight(x);
        for (int i = 1; i <= base.num_indices(); ++i) expected = expected && base.eps(i, y) <= base.phi(i, x);
        EXPECT_EQ(sq.is_highest_weight(x * base.size() + y), expected);
      }
    }
  }
}

TEST(Tensor, GL2CubeHasThreeHighestWeights) {
  const TensorPower tp(build_minuscule(CartanContext::gl(2), Minuscule::vector()), 3);
  EXPECT_EQ(highest_weight_elements(tp.crystal()).size(), 3u);
}

TEST(Tensor, SizeLimit) {
  EXPECT_THROW(TensorPower(build_minuscule(CartanContext::gl(3), Minuscule::vector()), 10, 1000), Error);
}

TEST(Rectify, ReachesHighestWeightInSameComponent) {
  const auto b = sl2();
  const auto pm = tensor(b, b);
  EXPECT_EQ(pm.label(rectify(pm, *pm.find("-⊗+"))), "+⊗+");
  for (const auto& base : all_bases()) {
    const TensorPower tp(base, 3);
    const auto& c = tp.crystal();
    for (Element x = 0; x < c.size(); ++x) {
      const Element h = rectify(c, x);
      EXPECT_TRUE(brute_hw(c, h));
      const auto comp = component(c, x);
      EXPECT_NE(std::find(comp.begin(), comp.end(), h), comp.end());
    }
  }
}

TEST(Decompose, Examples) {
  const auto gl2 = build_minuscule(CartanContext::gl(2), Minuscule::vector());
  const auto two = decompose(gl2, 2);
  const auto ctx = CartanContext::gl(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two.at(Weight{ctx, {2, 0}}).count, 1u);
  EXPECT_EQ(two.at(Weight{ctx, {2, 0}}).component_size, 3u);
  EXPECT_EQ(two.at(Weight{ctx, {1, 1}}).component_size, 1u);

  const auto four = decompose(gl2, 4);
  EXPECT_EQ(four.at(Weight{ctx, {4, 0}}).count, 1u);
  EXPECT_EQ(four.at(Weight{ctx, {3, 1}}).count, 3u);
  EXPECT_EQ(four.at(Weight{ctx, {2, 2}}).count, 2u);

  EXPECT_EQ(decompose(sl2(), 4).at(Weight{CartanContext::sl2(), {0}}).count, 2u);
  const auto zero = decompose(gl2, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero.begin()->second.component_size, 1u);
}
