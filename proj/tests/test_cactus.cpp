#include <gtest/gtest.h>

#include "coboundary/cactus.hpp"
#include "coboundary/growth.hpp"

using namespace coboundary;
using namespace coboundary::cactus;

TEST(CactusWord, ParseAndPrint) {
  const auto w = CactusWord::parse(6, "s(1,4) s(2,3)");
  ASSERT_EQ(w.gens.size(), 2u);
  EXPECT_EQ(w.gens[0], (CactusGen{1, 4}));
  EXPECT_EQ(w.to_string(), "s(1,4) s(2,3)");
  EXPECT_EQ(CactusWord::parse(6, "s(1,4),s(2,3)"), w);
  EXPECT_EQ(CactusWord::parse(6, "s(1, 4)s(2 ,3)"), w);
  EXPECT_TRUE(CactusWord::parse(3, "").gens.empty());
  EXPECT_EQ(CactusWord::parse(3, "").to_string(), "");
}

TEST(CactusWord, ParseErrors) {
  for (const char* text : {"s(1,4", "t(1,2)", "s(1,2,3)", "s(a,2)", "s(1,2) x"}) {
    try {
      CactusWord::parse(6, text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << text;
    }
  }
  EXPECT_THROW(CactusWord::parse(3, "s(1,4)"), Error);
  EXPECT_THROW(CactusWord::parse(3, "s(2,2)"), Error);
}

TEST(Permutations, Images) {
  EXPECT_EQ(perm_image(CactusGen{1, 3}, 3), (Permutation{3, 2, 1}));
  EXPECT_EQ(perm_image(CactusWord::parse(3, "s(1,3) s(1,2) s(1,3)")), (Permutation{1, 3, 2}));
  EXPECT_EQ(perm_image(CactusWord(4, {})), identity_perm(4));
  EXPECT_EQ(perm_image(CactusWord::parse(6, "s(1,4) s(1,4)")), identity_perm(6));
  const auto a = CactusWord::parse(5, "s(1,2) s(4,5)");
  const auto b = CactusWord::parse(5, "s(4,5) s(1,2)");
  EXPECT_EQ(perm_image(a), perm_image(b));
}

TEST(Permutations, RelationsHoldForAllPairs) {
  auto same = [](const CactusWord& l, const CactusWord& r) { return perm_image(l) == perm_image(r); };
  for (int r = 2; r <= 7; ++r) {
    for (const auto& a : all_generators(r)) {
      EXPECT_TRUE(relation_check(Relation::Involution, r, a, {}, same));
      for (const auto& b : all_generators(r)) {
        if (a.q < b.p) {
          EXPECT_TRUE(relation_check(Relation::Disjoint, r, a, b, same));
        }
        if (a.p <= b.p && b.q <= a.q) {
          EXPECT_TRUE(relation_check(Relation::Nested, r, a, b, same));
        }
      }
    }
  }
}

TEST(Relations, SideConditions) {
  EXPECT_THROW(relation_sides(Relation::Disjoint, 5, {1, 3}, {2, 4}), Error);
  EXPECT_THROW(relation_sides(Relation::Nested, 5, {2, 4}, {1, 3}), Error);
  const auto [lhs, rhs] = relation_sides(Relation::Nested, 6, {1, 6}, {2, 3});
  EXPECT_EQ(lhs.to_string(), "s(1,6) s(2,3)");
  EXPECT_EQ(rhs.to_string(), "s(4,5) s(1,6)");
}

TEST(Reduction, Examples) {
  EXPECT_EQ(reduce_to_s1q({1, 5}, 6).to_string(), "s(1,5)");
  EXPECT_EQ(reduce_to_s1q({2, 3}, 6).to_string(), "s(1,3) s(1,2) s(1,3)");
  EXPECT_EQ(reduce_to_s1q({2, 4}, 6).to_string(), "s(1,4) s(1,3) s(1,4)");
  for (int r = 2; r <= 7; ++r)
    for (const auto& g : all_generators(r)) EXPECT_EQ(perm_image(reduce_to_s1q(g, r)), perm_image(g, r));
}

TEST(TauPresentation, Images) {
  EXPECT_EQ(tau_to_s(1, 4).to_string(), "s(1,2)");
  EXPECT_EQ(tau_to_s(2, 4).to_string(), "s(1,2) s(1,3) s(1,2)");
  EXPECT_EQ(q_word(0), TauWord{});
  EXPECT_EQ(q_word(2), (TauWord{1, 2, 1}));
  for (int r = 2; r <= 6; ++r) {
    for (const auto& g : all_generators(r)) EXPECT_EQ(perm_image_tau(s_to_tau(g), r), perm_image(g, r));
    for (int i = 1; i < r; ++i) {
      Permutation swap = identity_perm(r);
      std::swap(swap[static_cast<std::size_t>(i - 1)], swap[static_cast<std::size_t>(i)]);
      EXPECT_EQ(perm_image(tau_to_s(i, r)), swap);
    }
  }
}

TEST(TauPresentation, AgreesWithLocalRulesOnWords) {
  using localrules::StepCrystal;
  for (const auto& ctx : {weights::CartanContext::gl(2), weights::CartanContext::gl(3), weights::CartanContext::sp(2)}) {
    for (int r = 2; r <= 5; ++r) {
      for (const auto& w : localrules::all_words(ctx, StepCrystal::vector(), r)) {
        for (const auto& g : all_generators(r)) EXPECT_EQ(growth::act_tau(s_to_tau(g), w), growth::act(g, w));
        for (int i = 1; i < r; ++i) EXPECT_EQ(growth::act(tau_to_s(i, r), w), localrules::tau(w, i));
      }
    }
  }
}

TEST(TauPresentation, ThirdRelationOnWords) {
  // (tau_i q_{k-1} q_{k-j} q_{k-1})^2 = 1 for i + 1 < j < k.
  using localrules::StepCrystal;
  const int r = 5;
  for (const auto& w : localrules::all_words(weights::CartanContext::gl(3), StepCrystal::vector(), r)) {
    for (int k = 1; k <= r; ++k) {
      for (int j = 1; j < k; ++j) {
        for (int i = 1; i + 1 < j; ++i) {
          TauWord x = {i};
          for (const auto& part : {q_word(k - 1), q_word(k - j), q_word(k - 1)}) x.insert(x.end(), part.begin(), part.end());
          TauWord sq = x;
          sq.insert(sq.end(), x.begin(), x.end());
          EXPECT_EQ(growth::act_tau(sq, w), w);
        }
      }
    }
  }
}
