#include <gtest/gtest.h>

#include "coboundary/bridge.hpp"
#include "coboundary/growth.hpp"
#include "coboundary/oracles.hpp"

using namespace coboundary;
using namespace coboundary::oracles;
using weights::CartanContext;

namespace {

Tableau T(const char* s) { return Tableau::parse(s); }

std::vector<Tableau> all_syt(int max_boxes) {
  std::vector<Tableau> out;
  for (int n = 1; n <= max_boxes; ++n)
    for (const auto& shape : weights::partitions_of(n))
      for (auto& t : all_standard(shape)) out.push_back(std::move(t));
  return out;
}

}  // namespace

TEST(Tableau, ParseAndPrint) {
  EXPECT_EQ(T("124/35").rows, (std::vector<std::vector<int>>{{1, 2, 4}, {3, 5}}));
  EXPECT_EQ(T("111 2 / 2 3 / 4").to_string(), "1112/23/4");
  EXPECT_EQ(T("1,2,10/3,11").to_string(), "1,2,10/3,11");
  EXPECT_THROW(T("12/x"), Error);
}

TEST(Tableau, Predicates) {
  EXPECT_TRUE(is_standard(T("124/35")));
  EXPECT_FALSE(is_standard(T("12/4")));
  EXPECT_FALSE(is_standard(T("21/3")));
  EXPECT_TRUE(is_semistandard(T("1112/23/4")));
  EXPECT_FALSE(is_semistandard(T("11/12")));
  EXPECT_TRUE(is_dual_semistandard(T("12/12/2")));
  EXPECT_EQ(conjugate(T("124/35")), T("13/25/4"));
}

TEST(Tableau, StandardCounts) {
  EXPECT_EQ(all_standard({3, 3}).size(), 5u);
  EXPECT_EQ(all_standard({4, 3, 1}).size(), 70u);
  std::size_t at8 = 0;
  for (const auto& shape : weights::partitions_of(8)) at8 += all_standard(shape).size();
  EXPECT_EQ(at8, 764u);
}

TEST(Evacuation, ExampleAndInvolution) {
  EXPECT_EQ(evacuation_oracle(T("134/256")), T("125/346"));
  EXPECT_EQ(evacuation_oracle(T("1234")), T("1234"));
  for (const auto& t : all_syt(7)) EXPECT_EQ(evacuation_oracle(evacuation_oracle(t)), t);
}

TEST(Promotion, OrderOnNonRectangle) {
  Tableau x = T("12/3");
  EXPECT_EQ(promotion_oracle(x), T("13/2"));
  x = promotion_oracle(promotion_oracle(promotion_oracle(x)));
  EXPECT_NE(x, T("12/3"));
}

TEST(Promotion, Basics) {
  EXPECT_EQ(promotion_oracle(T("1/2/3")), T("1/2/3"));
  EXPECT_EQ(promotion_oracle(T("123/456")), T("125/346"));
  // Order n holds on rectangles only.
  for (const auto& t : all_syt(8)) {
    const auto sh = t.shape().trimmed();
    if (std::adjacent_find(sh.begin(), sh.end(), std::not_equal_to<>()) != sh.end()) continue;
    Tableau x = t;
    for (int k = 0; k < t.size(); ++k) x = promotion_oracle(x);
    EXPECT_EQ(x, t) << t.to_string();
  }
}

TEST(Promotion, MatchesGrowth) {
  for (const auto& t : all_syt(7)) {
    const auto ctx = CartanContext::gl(std::max(2, t.shape().length()));
    const auto w = bridge::word_from_tableau(t, ctx);
    EXPECT_EQ(bridge::tableau_from_word(growth::promotion(w)), promotion_oracle(t)) << t.to_string();
    EXPECT_EQ(bridge::tableau_from_word(growth::evacuation(w)), evacuation_oracle(t)) << t.to_string();
  }
}

TEST(BenderKnuth, Example) {
  EXPECT_EQ(bender_knuth(T("1112/23/4"), 2), T("1113/23/4"));
  for (const auto& t : all_semistandard({3, 2, 1}, 4))
    for (int i = 1; i < 4; ++i) EXPECT_EQ(bender_knuth(bender_knuth(t, i), i), t);
}

TEST(BenderKnuth, SwapsContent) {
  for (const auto& t : all_semistandard({3, 2}, 3)) {
    const auto b = bender_knuth(t, 1);
    EXPECT_TRUE(is_semistandard(b));
    int ones = 0, twos = 0, bones = 0, btwos = 0;
    for (const auto& row : t.rows)
      for (int x : row) ones += x == 1, twos += x == 2;
    for (const auto& row : b.rows)
      for (int x : row) bones += x == 1, btwos += x == 2;
    EXPECT_EQ(ones, btwos);
    EXPECT_EQ(twos, bones);
  }
}

TEST(BenderKnuth, ViaConjugateSequence) {
  const auto ctx = CartanContext::gl(4);
  for (const auto& t : all_semistandard({4, 2, 1}, 5)) {
    const auto conj = conjugate_sequence(gt_pattern(t, 5));
    const auto w = bridge::word_from_sequence(conj, ctx);
    for (int i = 1; i < 5; ++i) {
      const auto back = conjugate_sequence(bridge::sequence_from_word(localrules::tau(w, i)));
      EXPECT_EQ(from_shape_sequence(back, weights::Strip::Horizontal), bender_knuth(t, i)) << t.to_string();
    }
  }
}

TEST(GelfandTsetlin, Example) {
  const auto gt = gt_pattern(T("1112/23/4"), 5);
  EXPECT_EQ(gt, (std::vector<weights::Partition>{{}, {3}, {4, 1}, {4, 2}, {4, 2, 1}, {4, 2, 1}}));
  EXPECT_EQ(conjugate_sequence(gt),
            (std::vector<weights::Partition>{{}, {1, 1, 1}, {2, 1, 1, 1}, {2, 2, 1, 1}, {3, 2, 1, 1}, {3, 2, 1, 1}}));
  EXPECT_EQ(from_shape_sequence(gt, weights::Strip::Horizontal), T("1112/23/4"));
  EXPECT_THROW(from_shape_sequence({{}, {1, 1}}, weights::Strip::Horizontal), Error);
  for (const auto& t : all_semistandard({3, 2, 1}, 4))
    EXPECT_EQ(from_shape_sequence(gt_pattern(t, 4), weights::Strip::Horizontal), t);
}

TEST(DualKnuth, ExampleAndInvolution) {
  EXPECT_EQ(dual_knuth(T("12/34"), 1), T("13/24"));
  EXPECT_EQ(dual_knuth(T("123/456"), 2), T("124/356"));
  for (const auto& t : all_syt(7))
    for (int i = 1; i + 2 <= t.size(); ++i) {
      EXPECT_EQ(dual_knuth(dual_knuth(t, i), i), t);
      EXPECT_TRUE(is_standard(dual_knuth(t, i)));
    }
}

TEST(DualKnuth, MatchesCactusGenerator) {
  for (const auto& t : all_syt(7)) {
    const auto ctx = CartanContext::gl(std::max(2, t.shape().length()));
    const auto w = bridge::word_from_tableau(t, ctx);
    for (int i = 1; i + 2 <= t.size(); ++i)
      EXPECT_EQ(bridge::tableau_from_word(growth::act(cactus::CactusGen{i, i + 2}, w)), dual_knuth(t, i))
          << t.to_string() << " i=" << i;
  }
}

TEST(Matching, BijectionWithTwoRowTableaux) {
  EXPECT_EQ(matching_from_tableau(T("123/456")).to_string(), "(1,6) (2,5) (3,4)");
  EXPECT_EQ(all_noncrossing(6).size(), 5u);
  EXPECT_EQ(all_noncrossing(8).size(), 14u);
  for (const auto& m : all_noncrossing(8)) {
    EXPECT_TRUE(m.is_noncrossing());
    EXPECT_EQ(matching_from_tableau(tableau_from_matching(m)), m);
  }
}

TEST(Matching, RuleExamples) {
  const Matching seq{6, {{1, 2}, {3, 4}, {5, 6}}};
  EXPECT_EQ(matching_s1p(seq, 6), seq);
  const Matching nested{6, {{1, 6}, {2, 5}, {3, 4}}};
  EXPECT_EQ(matching_s1p(nested, 6), nested);
  EXPECT_EQ(matching_s1p(nested, 4).to_string(), "(1,2) (3,6) (4,5)");
}

TEST(Matching, PreservesNoncrossingAndMatchesGrowth) {
  for (int r = 2; r <= 8; r += 2) {
    for (const auto& m : all_noncrossing(r)) {
      const auto w = bridge::word_from_matching(m);
      for (const auto& g : cactus::all_generators(r)) {
        const auto got = matching_action(m, g.p, g.q);
        EXPECT_TRUE(got.is_noncrossing()) << m.to_string() << " " << g.to_string();
        EXPECT_EQ(got, bridge::matching_from_word(growth::act(g, w))) << m.to_string() << " " << g.to_string();
      }
    }
  }
}

TEST(Bridge, TableauWords) {
  const auto ctx = CartanContext::gl(3);
  const auto w = bridge::word_from_tableau(T("12/3"), ctx);
  ASSERT_EQ(w.corners.size(), 4u);
  EXPECT_EQ(w.corners[2], (weights::Weight{ctx, {2, 0, 0}}));
  EXPECT_EQ(w.corners[3], (weights::Weight{ctx, {2, 1, 0}}));
  for (const auto& t : all_syt(8))
    EXPECT_EQ(bridge::tableau_from_word(bridge::word_from_tableau(t, CartanContext::gl(std::max(2, t.shape().length())))), t);
}
