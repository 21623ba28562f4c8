#include <gtest/gtest.h>

#include "coboundary/json_io.hpp"

using namespace coboundary;
using namespace coboundary::json_io;
using weights::CartanContext;

TEST(Json, WeightRoundTrip) {
  const weights::Weight w{CartanContext::gl(3), {2, 1, 0}};
  const json j = to_json(w);
  EXPECT_EQ(j.dump(), R"({"coords":[2,1,0],"family":"GL","rank":3})");
  EXPECT_EQ(weight_from_json(j), w);
  EXPECT_EQ(weight_from_json(json::parse(R"({"family":"GL","rank":3,"coords":[2,1]})")), w);
  EXPECT_THROW(weight_from_json(json::parse(R"({"family":"GL","rank":1,"coords":[2,1]})")), Error);
  EXPECT_THROW(weight_from_json(json::parse(R"({"family":"E","rank":1,"coords":[]})")), Error);
}

TEST(Json, WordRoundTrip) {
  const auto j = json::parse(R"({"context":{"family":"Sp","rank":2},
      "corners":[[],[1],[2],[2,1],[1,1],[1],[]]})");
  const auto w = word_from_json(j);
  EXPECT_EQ(w.length(), 6);
  EXPECT_EQ(word_from_json(to_json(w)), w);
  EXPECT_EQ(to_json(w)["corners"][3], json::parse("[2,1]"));
}

TEST(Json, WordErrors) {
  try {
    word_from_json(json::parse(R"({"context":{"family":"GL","rank":2},"corners":[[],[1],[1,2]]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidStep);
  }
  try {
    word_from_json(json::parse(R"({"corners":[[]]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
  EXPECT_THROW(word_from_json(json::parse(R"({"context":{"family":"GL","rank":2},"corners":"x"})")), Error);
}

TEST(Json, ExteriorSteps) {
  const auto j = json::parse(R"J({"context":{"family":"GL","rank":3},
      "steps":["exterior(2)","vector"],"corners":[[],[1,1],[2,1]]})J");
  const auto w = word_from_json(j);
  EXPECT_EQ(w.steps[0], localrules::StepCrystal::exterior(2));
  EXPECT_EQ(word_from_json(to_json(w)), w);
}

TEST(Json, TableauxMatchingsCactus) {
  const auto t = tableau_from_json(json::parse("[[1,2,4],[3,5]]"));
  EXPECT_EQ(t.to_string(), "124/35");
  EXPECT_EQ(tableau_from_json(json("124/35")), t);
  EXPECT_EQ(to_json(t).dump(), "[[1,2,4],[3,5]]");

  const auto m = matching_from_json(json::parse("[[4,3],[1,2]]"), 4);
  EXPECT_EQ(m.to_string(), "(1,2) (3,4)");
  EXPECT_EQ(to_json(m).dump(), "[[1,2],[3,4]]");

  const auto c = cactus_from_json(json::parse("[[1,4],[2,3]]"), 5);
  EXPECT_EQ(c.to_string(), "s(1,4) s(2,3)");
  EXPECT_EQ(cactus_from_json(json("s(1,4) s(2,3)"), 5), c);
  EXPECT_THROW(cactus_from_json(json::parse("[[1,9]]"), 5), Error);
}

TEST(Json, WindowRoundTrip) {
  const auto w = word_from_json(json::parse(R"({"context":{"family":"GL","rank":2},
      "corners":[[],[1],[2],[2,1],[2,2]]})"));
  const auto c = growth::cylinder_from_row(w, 2);
  const auto back = window_from_json(to_json(c));
  EXPECT_EQ(back.rows, c.rows);
  EXPECT_EQ(back.lambda, c.lambda);
  EXPECT_EQ(growth::validate(back), "");
  EXPECT_THROW(window_from_json(json::parse(R"({"context":{"family":"GL","rank":2},"rows":[[[]],[[],[1]]]})")),
               Error);
}

TEST(Json, Matrix) {
  const auto m = algebra::QMatrix::diagonal({algebra::RationalFunction(algebra::q_int(2)), 1});
  EXPECT_EQ(to_json(m).dump(), R"([["q + q^-1","0"],["0","1"]])");
}
