#include <gtest/gtest.h>

#include "fpsloop/algebra.hpp"
#include "fpsloop/error.hpp"

using namespace fpsloop;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3"), 3);
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(to_string(make_rational(4, -6)), "-2/3");
  EXPECT_EQ(to_string(make_rational(10, 5)), "2");
  EXPECT_EQ(code_of([] { parse_rational("1/0"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_rational("x"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_rational(""); }), ErrorCode::ParseError);
}

TEST(Rational, ExactAtScale) {
  Rational h = 0;
  for (int k = 1; k <= 30; ++k) h += make_rational(1, k);
  EXPECT_EQ(to_string(h), "9304682830147/2329089562800");
}

TEST(Algebra, FreeTruncationDropsLongWords) {
  auto F = builtin::free_algebra({"a", "b"}, 2);
  const AlgElt a = AlgElt::symbol(F, "a"), b = AlgElt::symbol(F, "b");
  EXPECT_EQ((a * b).to_string(), "a*b");
  EXPECT_TRUE((a * b * a).is_zero());
  EXPECT_EQ(commutator(a, b).to_string(), "a*b - b*a");
  EXPECT_EQ(F->basis().size(), 2u + 4u);
}

TEST(Algebra, WeightedGeneratorsAndMultilinearQuotient) {
  FreeTruncatedOptions opts;
  opts.multilinear = true;
  auto F = Algebra::free_truncated({{"x", 2}, {"y", 1}}, 4, opts);
  const AlgElt x = AlgElt::symbol(F, "x"), y = AlgElt::symbol(F, "y");
  EXPECT_EQ((x * y).homogeneous_degree(), 3);
  EXPECT_TRUE((y * y).is_zero());
  EXPECT_FALSE((x * y).is_zero());
}

TEST(Algebra, RejectsNonassociativeTable) {
  // e0 e0 = e1, everything else zero except e1 e0 = e0: (e1 e0) e0 = e1 but e1 (e0 e0) = 0.
  ProductTable table;
  table[{0, 0}] = {{1, 1}};
  table[{1, 0}] = {{0, 1}};
  EXPECT_EQ(code_of([&] { Algebra::from_structure_constants({"e0", "e1"}, table); }),
            ErrorCode::AssociativityViolation);
}

TEST(Algebra, RejectsInconsistentGrading) {
  ProductTable table;
  table[{0, 0}] = {{1, 1}};
  StructureConstantsOptions opts;
  opts.grading = std::vector<int>{1, 1};
  EXPECT_EQ(code_of([&] { Algebra::from_structure_constants({"x", "y"}, table, opts); }),
            ErrorCode::GradingViolation);
}

TEST(Algebra, EmptyGenerators) {
  EXPECT_EQ(code_of([] { Algebra::free_truncated({}, 3); }), ErrorCode::EmptyGenerators);
}

TEST(Algebra, UpperTriangularProducts) {
  auto U = builtin::upper_triangular(3);
  const AlgElt e12 = AlgElt::symbol(U, "E12"), e23 = AlgElt::symbol(U, "E23"),
               e13 = AlgElt::symbol(U, "E13");
  EXPECT_EQ(e12 * e23, e13);
  EXPECT_TRUE((e23 * e12).is_zero());
  EXPECT_EQ(e13.homogeneous_degree(), 2);
}

TEST(Algebra, SplitNullRelations) {
  auto R = builtin::split_null(2);
  const AlgElt e1 = AlgElt::symbol(R, "e1"), e2 = AlgElt::symbol(R, "e2");
  // e1 is the class of e, e2 of e^2; e^3 = e^2.
  EXPECT_EQ(e1 * e1, e2);
  EXPECT_EQ(e2 * e1, e2);
  EXPECT_TRUE(R->unital());
}

TEST(Algebra, EvRelations) {
  auto E = builtin::ev_algebra();
  const AlgElt e = AlgElt::symbol(E, "e"), v = AlgElt::symbol(E, "v");
  EXPECT_EQ(e * e, e);
  EXPECT_TRUE((e * v).is_zero());
  EXPECT_EQ(v * e, v);
  EXPECT_TRUE((v * v).is_zero());
}

TEST(Algebra, CommIdealPredicate) {
  // Hand values: ev has x[y,z] = 0 for basis triples, the free algebra does not.
  const auto ev = check_s_comm_ideal(builtin::ev_algebra());
  EXPECT_TRUE(ev.s_brackets_zero);
  EXPECT_FALSE(ev.brackets_s3_zero);  // [e,v] e e e = -v != 0
  const auto ut = check_s_comm_ideal(builtin::upper_triangular(3));
  EXPECT_TRUE(ut.s_brackets_zero && ut.brackets_s3_zero);
  const auto fr = check_s_comm_ideal(builtin::free_algebra({"a", "b"}, 3));
  EXPECT_FALSE(fr.s_brackets_zero);
}

TEST(Algebra, UnknownSymbolAndSpec) {
  auto F = builtin::free_algebra({"a"}, 2);
  EXPECT_EQ(code_of([&] { AlgElt::symbol(F, "z"); }), ErrorCode::UnknownSymbol);
  EXPECT_EQ(code_of([] { builtin::from_spec("nope:3"); }), ErrorCode::BadParams);
  EXPECT_EQ(builtin::from_spec("laurent:-4:4")->basis().size(), 9u);
}
