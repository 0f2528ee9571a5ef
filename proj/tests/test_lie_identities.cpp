#include <gtest/gtest.h>

#include "fpsloop/error.hpp"
#include "fpsloop/lie_identities.hpp"

using namespace fpsloop;

namespace {

CoeffPoly mono(const AlgebraPtr& A, const char* label, int k) {
  return CoeffPoly::monomial(AlgElt::symbol(A, label), k);
}

// sl2 with basis e, f, h: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieTable sl2(bool corrupt) {
  using Elt = LieTable::Elt;
  std::map<std::pair<std::size_t, std::size_t>, Elt> t;
  t[{2, 0}] = Elt{{0, 2}};
  t[{0, 2}] = Elt{{0, -2}};
  t[{2, 1}] = Elt{{1, -2}};
  t[{1, 2}] = Elt{{1, 2}};
  t[{0, 1}] = Elt{{2, 1}};
  t[{1, 0}] = Elt{{2, -1}};
  if (corrupt) t[{1, 2}] = Elt{{1, -2}};
  return LieTable({"e", "f", "h"}, t);
}

}  // namespace

TEST(CoeffPoly, DerivativeAndProduct) {
  auto E = builtin::ev_algebra();
  const CoeffPoly p = mono(E, "e", 3) + mono(E, "v", 1);
  EXPECT_EQ(p.derivative(), mono(E, "e", 2) * Rational(3) + mono(E, "v", 0));
  EXPECT_EQ(mono(E, "v", 1) * mono(E, "e", 2), mono(E, "v", 3));
  EXPECT_TRUE((mono(E, "e", 1) * mono(E, "v", 2)).is_zero());
}

TEST(Wronskian, HandValue) {
  auto E = builtin::ev_algebra();
  // <et, et^2> = 2t e*et - 1 e*et^2 = e t^2
  EXPECT_EQ(wronskian_bracket(mono(E, "e", 1), mono(E, "e", 2)), mono(E, "e", 2));
  // <e, vt> = v e - 0 = (v e) t ... with v e = v
  EXPECT_EQ(wronskian_bracket(mono(E, "e", 0), mono(E, "v", 1)), mono(E, "v", 0));
}

TEST(StandardIdentity, LiteralSumMatchesSubsetRecursion) {
  auto E = builtin::ev_algebra();
  auto br = [](const CoeffPoly& f, const CoeffPoly& g) { return wronskian_bracket(f, g); };
  const IdentityReport r = check_st_identity(E, 5, 3);
  ASSERT_FALSE(r.pass);
  ASSERT_EQ(r.witness.size(), 5u);
  // Recompute the reported witness with the literal permutation sum.
  const std::vector<std::pair<const char*, int>> args{{"e", 0}, {"e", 1}, {"e", 2}, {"v", 1}};
  std::vector<CoeffPoly> xs;
  for (const auto& [l, k] : args) xs.push_back(mono(E, l, k));
  const CoeffPoly literal = standard_identity<CoeffPoly>(br, xs, mono(E, "e", 0));
  EXPECT_EQ(literal.to_string(), r.value);
}

TEST(StandardIdentity, PassesWhereExpected) {
  EXPECT_TRUE(check_st_identity(builtin::upper_triangular(3), 5, 2).pass);
  // K[t] with the Wronskian bracket satisfies St5 but not St3.
  EXPECT_TRUE(check_st_identity(builtin::scalar(), 5, 3).pass);
  EXPECT_FALSE(check_st_identity(builtin::scalar(), 3, 3).pass);
  EXPECT_THROW(check_st_identity(builtin::scalar(), 1, 3), Error);
  EXPECT_THROW(check_st_identity(builtin::scalar(), 8, 3), Error);
}

TEST(Jacobi, Sl2TableAndCorruptedCopy) {
  for (bool corrupt : {false, true}) {
    const LieTable lie = sl2(corrupt);
    std::vector<LieTable::Element> span;
    for (std::size_t i = 0; i < lie.dim(); ++i) span.push_back(lie.basis(i));
    const IdentityReport r = jacobi_check<LieTable::Element>(
        [&](const LieTable::Element& x, const LieTable::Element& y) { return lie.bracket(x, y); }, span);
    EXPECT_EQ(r.pass, !corrupt);
    if (corrupt) EXPECT_EQ(r.note, "antisymmetry");
  }
}

TEST(Jacobi, WronskianAndWitt) {
  auto E = builtin::ev_algebra();
  const auto span = wronskian_spanning_set(E, 2);
  EXPECT_EQ(span.size(), 6u);
  const IdentityReport w = jacobi_check<CoeffPoly>(
      [](const CoeffPoly& f, const CoeffPoly& g) { return wronskian_bracket(f, g); }, span);
  EXPECT_TRUE(w.pass);

  auto L = builtin::laurent_window(-2, 2);
  const AlgElt t1 = AlgElt::symbol(L, "t1"), tm1 = AlgElt::symbol(L, "tm1");
  // Witt: <t^1, t^-1> = (-1 - 1) t^0
  EXPECT_EQ(graded_binary_bracket(t1, tm1), AlgElt::symbol(L, "t0") * Rational(-2));
}

TEST(SabininAxioms, HoldOnUpperTriangular) {
  SabininAxiomsOptions opts;
  opts.max_arity = 2;
  const SabininAxiomsReport r = sabinin_axioms_check(builtin::upper_triangular(3), opts);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.cyclic.checked, 0);
  opts.max_arity = 5;
  EXPECT_THROW(sabinin_axioms_check(builtin::scalar(), opts), Error);
}
