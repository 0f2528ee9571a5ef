#include <gtest/gtest.h>

#include "fpsloop/acceptance.hpp"
#include "fpsloop/error.hpp"
#include "fpsloop/io.hpp"
#include "fpsloop/random.hpp"

using namespace fpsloop;

TEST(Parser, HandExamples) {
  auto F = builtin::free_algebra({"a", "b"}, 3);
  const Series s = parse_series("t + a*t^2", F, 3, true);
  EXPECT_EQ(s.coeff(1), AlgElt::symbol(F, "a"));
  const Series h = parse_series("t + (1/2)*a*b*t^3", F, 3, true);
  EXPECT_EQ(h.coeff(2), AlgElt::symbol(F, "a") * AlgElt::symbol(F, "b") * make_rational(1, 2));
  EXPECT_TRUE(parse_series("t", F, 3, true).is_unit());
  // Powers past the truncation are dropped.
  EXPECT_TRUE(parse_series("t + a*a*a*a*t^5", builtin::free_algebra({"a"}, 4), 3, true).is_unit());
}

TEST(Parser, ErrorsCarryPositions) {
  auto F = builtin::free_algebra({"a", "b"}, 3);
  try {
    parse_series("t + c*t^2", F, 3, true);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSymbol);
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_series("a*t^2", F, 3, true), ParseError);
  EXPECT_THROW(parse_series("t + a*t^1", F, 3, true), ParseError);
  EXPECT_THROW(parse_series("t + a*t^2 +", F, 3, true), ParseError);
  EXPECT_THROW(parse_series("t + a*t", F, 3, true), ParseError);
}

TEST(Parser, RoundTripsThePrinter) {
  Rng rng(17);
  for (const auto& [alg, graded] :
       std::vector<std::pair<AlgebraPtr, bool>>{{builtin::free_algebra({"a", "b", "c"}, 5), true},
                                                 {builtin::split_null(3), false},
                                                 {builtin::laurent_window(-4, 4), true},
                                                 {builtin::ev_algebra(), false}}) {
    for (int s = 0; s < 50; ++s) {
      const Series x = random_series(alg, 5, graded, rng);
      const std::string text = print_series(x);
      EXPECT_EQ(parse_series(text, alg, 5, graded), x) << text;
    }
  }
}

TEST(Json, SeriesRoundTrip) {
  Rng rng(23);
  auto F = builtin::free_algebra({"a", "b"}, 4);
  for (int s = 0; s < 20; ++s) {
    const Series x = random_series(F, 4, true, rng);
    EXPECT_EQ(series_from_json(json::parse(series_to_json(x).dump()), F), x);
  }
}

TEST(Json, AlgebraDocuments) {
  const json doc = json::parse(R"({"kind": "structure_constants", "basis": ["e", "v"],
      "table": {"0,0": [[0, "1"]], "1,0": [[1, "1"]]}, "name": "ev2"})");
  auto A = algebra_from_json(doc);
  EXPECT_EQ(A->name(), "ev2");
  EXPECT_TRUE(check_s_comm_ideal(A).s_brackets_zero);
  auto B = algebra_from_json(algebra_to_json(A));
  EXPECT_EQ(B->dim(), 2u);
  auto F = load_algebra(R"({"kind": "free_truncated", "generators": [["x", 2], ["y", 1]], "max_word_degree": 3})");
  EXPECT_TRUE(F->is_free());
  EXPECT_EQ(load_algebra("ut:3")->dim(), 3u);
  EXPECT_THROW(load_algebra(R"({"kind": "structure_constants", "basis": ["x"], "table": {"0,0": [[3, "1"]]}})"),
               Error);
}

TEST(Json, GradedElements) {
  auto F = builtin::free_algebra({"a", "b"}, 3);
  const GradedElt g = make_graded(2, AlgElt::symbol(F, "a") * AlgElt::symbol(F, "b"));
  EXPECT_EQ(graded_from_json(F, graded_to_json(g)), g);
  EXPECT_THROW(graded_from_json(F, json::parse(R"({"degree": 1, "terms": [["1", ["a", "b"]]]})")), Error);
}

TEST(CheckGroup, VerdictsAndWitness) {
  const GroupReport ut = check_group(builtin::upper_triangular(3), 4, 50);
  EXPECT_EQ(ut.verdict, GroupVerdict::Group);
  const GroupReport fr = check_group(builtin::free_algebra({"a", "b"}, 3), 4, 50);
  EXPECT_EQ(fr.verdict, GroupVerdict::NotGroup);
  ASSERT_EQ(fr.witness.size(), 3u);
  EXPECT_EQ(report_to_json(fr).at("seed"), kDefaultSeed);
  // Same seed, same witness.
  EXPECT_EQ(check_group(builtin::free_algebra({"a", "b"}, 3), 4, 50).witness, fr.witness);
}
