#include <gtest/gtest.h>

#include "coboundary/growth.hpp"
#include "coboundary/localrules.hpp"

using namespace coboundary;
using namespace coboundary::localrules;
using weights::CartanContext;
using weights::Weight;

namespace {

Weight w(const CartanContext& ctx, std::vector<int> c) {
  c.resize(static_cast<std::size_t>(ctx.rank), 0);
  return {ctx, c};
}

}  // namespace

TEST(CompleteCell, Examples) {
  const auto gl2 = CartanContext::gl(2);
  EXPECT_EQ(complete_cell(w(gl2, {1}), w(gl2, {2}), w(gl2, {2, 1})), w(gl2, {1, 1}));
  const auto gl4 = CartanContext::gl(4);
  EXPECT_EQ(complete_cell(w(gl4, {1, 1, 1}), w(gl4, {2, 1, 1, 1}), w(gl4, {2, 2, 1, 1}), StepCrystal::exterior(2),
                          StepCrystal::vector()),
            w(gl4, {2, 1, 1}));
  const auto k = w(gl2, {2, 1});
  EXPECT_EQ(complete_cell(k, k, k, StepCrystal::exterior(0), StepCrystal::exterior(0)), k);
}

TEST(CompleteCell, AnyThreeCornersDetermineTheFourth) {
  for (const auto& ctx : {CartanContext::gl(2), CartanContext::gl(3), CartanContext::sp(2)}) {
    for (const auto& word : all_words(ctx, StepCrystal::vector(), 2)) {
      const auto& kappa = word.corners[0];
      const auto& lambda = word.corners[1];
      for (const auto& nu : step_targets(lambda, StepCrystal::vector())) {
        const Weight mu = complete_cell(kappa, lambda, nu, StepCrystal::vector(), StepCrystal::vector());
        EXPECT_EQ(weights::dom_w(kappa + nu - mu), lambda);
      }
    }
  }
}

TEST(CompleteCell, InvalidInputNamesTheCell) {
  const auto gl2 = CartanContext::gl(2);
  try {
    complete_cell(w(gl2, {}), w(gl2, {2}), w(gl2, {2, 1}), StepCrystal::vector(), StepCrystal::vector());
    FAIL() << "expected InvalidStep";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidStep);
    EXPECT_NE(std::string(e.what()).find("[2]"), std::string::npos);
  }
}

TEST(Pasting, OneByTwoRectangleEqualsMergedCell) {
  // Completing two cells with vector edges and reading the composite edge as
  // an exterior square agrees with completing the merged cell directly, when
  // the composite steps are exterior steps.
  const auto ctx = CartanContext::gl(3);
  for (const auto& word : all_words(ctx, StepCrystal::vector(), 3)) {
    const auto& kappa = word.corners[1];
    for (const auto& lambda : step_targets(kappa, StepCrystal::vector())) {
      for (const auto& mid : step_targets(lambda, StepCrystal::vector())) {
        for (const auto& nu : step_targets(mid, StepCrystal::vector())) {
          if (!valid_step(lambda, nu, StepCrystal::exterior(2))) continue;
          const Weight m1 = complete_cell(kappa, lambda, mid, StepCrystal::vector(), StepCrystal::vector());
          const Weight m2 = complete_cell(m1, mid, nu, StepCrystal::vector(), StepCrystal::vector());
          if (!valid_step(kappa, m2, StepCrystal::exterior(2))) continue;
          EXPECT_EQ(complete_cell(kappa, lambda, nu, StepCrystal::vector(), StepCrystal::exterior(2)), m2);
        }
      }
    }
  }
}

TEST(Tau, Example) {
  const auto gl2 = CartanContext::gl(2);
  const auto word = HighestWeightWord::from_corners(gl2, {w(gl2, {}), w(gl2, {1}), w(gl2, {2}), w(gl2, {2, 1})});
  const auto want = HighestWeightWord::from_corners(gl2, {w(gl2, {}), w(gl2, {1}), w(gl2, {1, 1}), w(gl2, {2, 1})});
  EXPECT_EQ(tau(word, 2), want);
}

TEST(Tau, ConjugateSequenceExample) {
  const auto gl4 = CartanContext::gl(4);
  HighestWeightWord word{gl4,
                         {StepCrystal::exterior(3), StepCrystal::exterior(2), StepCrystal::exterior(1),
                          StepCrystal::exterior(1), StepCrystal::exterior(0)},
                         {w(gl4, {}), w(gl4, {1, 1, 1}), w(gl4, {2, 1, 1, 1}), w(gl4, {2, 2, 1, 1}),
                          w(gl4, {3, 2, 1, 1}), w(gl4, {3, 2, 1, 1})}};
  word.validate();
  const auto moved = tau(word, 2);
  EXPECT_EQ(moved.corners[2], w(gl4, {2, 1, 1}));
  EXPECT_EQ(moved.steps[1].k, 1);
  EXPECT_EQ(moved.steps[2].k, 2);
}

TEST(Tau, Involutive) {
  for (const auto& ctx : {CartanContext::gl(2), CartanContext::gl(3), CartanContext::sp(2)}) {
    for (int r = 2; r <= 6; ++r)
      for (const auto& word : all_words(ctx, StepCrystal::vector(), r))
        for (int i = 1; i < r; ++i) EXPECT_EQ(tau(tau(word, i), i), word);
  }
}

TEST(Tau, FullColumnsAreFixed) {
  const auto gl3 = CartanContext::gl(3);
  const auto words = all_words(gl3, StepCrystal::exterior(3), 4);
  ASSERT_EQ(words.size(), 1u);
  for (int i = 1; i < 4; ++i) EXPECT_EQ(tau(words[0], i), words[0]);
}

TEST(CommutorPrefix, LastSplitIsSingleTau) {
  const auto ctx = CartanContext::gl(3);
  for (const auto& word : all_words(ctx, StepCrystal::vector(), 4)) EXPECT_EQ(commutor_prefix(word, 3), tau(word, 3));
}

TEST(CommutorPrefix, MatchesRectangle) {
  // Moving the first letter past the rest is the rectangle of height one.
  const auto ctx = CartanContext::sl2();
  for (const auto& word : all_words(ctx, StepCrystal::vector(), 3)) {
    const auto moved = commutor_prefix(word, 1);
    EXPECT_EQ(moved, tau(tau(word, 1), 2));
    const auto rect = growth::commutor_rectangle(word, 1);
    std::vector<Weight> bottom = rect.grid.back();
    EXPECT_EQ(std::vector<Weight>(moved.corners.begin(), moved.corners.end() - 1), bottom);
  }
}

TEST(Words, Counts) {
  // Standard tableaux with at most two rows and four boxes: 1 + 3 + 2.
  EXPECT_EQ(all_words(CartanContext::gl(2), StepCrystal::vector(), 4).size(), 6u);
  EXPECT_EQ(all_words(CartanContext::sl2(), StepCrystal::vector(), 6).size(), 20u);
}

TEST(Words, ValidateRejectsBadSteps) {
  const auto gl2 = CartanContext::gl(2);
  const auto bad = HighestWeightWord::from_corners(gl2, {w(gl2, {}), w(gl2, {1}), w(gl2, {1, 2})});
  EXPECT_THROW(bad.validate(), Error);
  EXPECT_EQ(StepCrystal::parse("exterior(2)"), StepCrystal::exterior(2));
  EXPECT_THROW(StepCrystal::parse("spin"), Error);
}
