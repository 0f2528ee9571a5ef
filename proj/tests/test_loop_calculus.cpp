#include <gtest/gtest.h>

#include "fpsloop/error.hpp"
#include "fpsloop/io.hpp"
#include "fpsloop/loop_calculus.hpp"
#include "fpsloop/random.hpp"

using namespace fpsloop;

namespace {

Series single(const AlgebraPtr& A, int T, int slot, const AlgElt& c) {
  Series s(A, T, A->graded());
  s.set_coeff(slot, c);
  return s;
}

}  // namespace

TEST(LoopCommutator, LeadingTerm) {
  auto F = Algebra::free_truncated({{"x", 2}, {"y", 1}}, 4);
  const AlgElt x = AlgElt::symbol(F, "x"), y = AlgElt::symbol(F, "y");
  const Series c = loop_commutator(single(F, 4, 2, x), single(F, 4, 1, y));
  // (i+1) xy - (j+1) yx with i = 2, j = 1
  EXPECT_TRUE(c.coeff(1).is_zero() && c.coeff(2).is_zero());
  EXPECT_EQ(c.coeff(3), x * y * Rational(3) - y * x * Rational(2));
}

TEST(LoopCommutator, InverseIdentity) {
  Rng rng(5);
  auto F = builtin::free_algebra({"a", "b"}, 5);
  for (int s = 0; s < 10; ++s) {
    const Series a = random_series(F, 5, true, rng), b = random_series(F, 5, true, rng);
    // (b o a) o [a, b] = a o b
    EXPECT_EQ(compose(compose(b, a), loop_commutator(a, b)), compose(a, b));
    const Series c = random_series(F, 5, true, rng);
    EXPECT_EQ(compose(compose(a, compose(b, c)), loop_associator(a, b, c)), compose(compose(a, b), c));
  }
}

TEST(Deviation, ValidationAndArity) {
  DeviationExpr e{DeviationBase::Associator, {1, 4}};
  EXPECT_EQ(e.arity(), 5);
  EXPECT_EQ(e.to_string(), "assoc_1,4");
  EXPECT_NO_THROW(e.validate());
  EXPECT_THROW((DeviationExpr{DeviationBase::Commutator, {3}}.validate()), Error);
  EXPECT_THROW((DeviationExpr{DeviationBase::Associator, {0}}.validate()), Error);
  auto F = builtin::free_algebra({"a"}, 3);
  EXPECT_THROW(deviation_apply(e, {Series::unit(F, 3, true)}), Error);
}

TEST(Deviation, PnmPattern) {
  EXPECT_EQ(p_nm_expr(1, 1).indices, std::vector<int>{});
  EXPECT_EQ(p_nm_expr(3, 1).indices, (std::vector<int>{1, 1}));
  EXPECT_EQ(p_nm_expr(2, 3).indices, (std::vector<int>{1, 3, 3}));
  EXPECT_EQ(p_nm_expr(2, 2).arity(), 5);
}

TEST(Deviation, FirstDeviationByHand) {
  Rng rng(9);
  auto F = builtin::free_algebra({"a", "b"}, 5);
  for (int s = 0; s < 5; ++s) {
    std::vector<Series> xs;
    for (int k = 0; k < 4; ++k) xs.push_back(random_series(F, 5, true, rng));
    // assoc_1(y, z, b, c) = ((y,b,c) o (z,b,c)) \ (y o z, b, c)
    const Series want = left_divide(compose(loop_associator(xs[0], xs[2], xs[3]),
                                            loop_associator(xs[1], xs[2], xs[3])),
                                    loop_associator(compose(xs[0], xs[1]), xs[2], xs[3]));
    EXPECT_EQ(deviation_apply({DeviationBase::Associator, {1}}, xs), want);
  }
}

TEST(Filtration, BinaryAndErrors) {
  const FiltrationBracket fb = filtration_bracket({}, 1, 2, 4);
  // <beta, gamma> = 3 gamma beta - 2 beta gamma
  EXPECT_EQ(fb.value.value, fb.z.value * fb.y.value * Rational(3) - fb.y.value * fb.z.value * Rational(2));
  EXPECT_THROW(filtration_bracket({2, 2}, 1, 1, 5), Error);
  EXPECT_THROW(filtration_bracket({0}, 1, 1, 5), Error);
}

TEST(Filtration, OneArgumentHandValue) {
  const FiltrationBracket fb = filtration_bracket({2}, 1, 1, 4);
  // <a_2; b, c> = 6 a [c, b]
  const AlgElt& a = fb.xs[0].value;
  EXPECT_EQ(fb.value.value, a * commutator(fb.z.value, fb.y.value) * Rational(6));
}

TEST(Absorption, LeadingCoefficient) {
  auto F = builtin::free_algebra({"alpha", "beta"}, 6);
  const AlgElt al = AlgElt::symbol(F, "alpha"), be = AlgElt::symbol(F, "beta");
  const AbsorptionWitness w = absorption_witness(al, be, 2, 1, 4);
  // [1 + beta (slot 1), 1 + alpha (slot 2)] at slot 3
  EXPECT_EQ(w.coefficient, be * al * Rational(2) - al * be * Rational(3));
  EXPECT_THROW(absorption_witness(al, be, 2, 1, 3), Error);
}

TEST(Klopsch, SolvesTheLinearSystem) {
  const KlopschSolution ba = klopsch_witness(1, 3, KlopschTarget::BA);
  EXPECT_EQ(ba.lambda, make_rational(3, 5));
  EXPECT_EQ(ba.mu, make_rational(-2, 5));
  const KlopschSolution ab = klopsch_witness(1, 3, KlopschTarget::AB);
  EXPECT_EQ(ab.lambda, make_rational(2, 5));
  EXPECT_EQ(ab.mu, make_rational(-3, 5));
  const AlgElt got = klopsch_verify(1, 3, ba.lambda, ba.mu);
  EXPECT_EQ(got.to_string(), "beta*alpha");
  EXPECT_THROW(klopsch_witness(1, 2, KlopschTarget::BA), Error);
}

TEST(NSequence, SuperadditiveOnRandomWords) {
  auto F = builtin::free_algebra({"a", "b"}, 6);
  const NSequenceReport r = n_sequence_check({DeviationBase::Associator, {2}}, {1, 2, 1, 1}, F, 6, 20, 1);
  EXPECT_TRUE(r.pass) << r.first_failure;
  EXPECT_EQ(r.samples, 20);
  EXPECT_THROW(n_sequence_check({DeviationBase::Associator, {}}, {1, 1}, F, 6, 1, 1), Error);
}

TEST(MultilinearStratum, KeepsWordsUsingEachLetterOnce) {
  auto F = builtin::free_algebra({"a", "b", "c"}, 3);
  const AlgElt a = AlgElt::symbol(F, "a"), b = AlgElt::symbol(F, "b"), c = AlgElt::symbol(F, "c");
  const AlgElt x = a * b + a * a + b * a * Rational(2) + a * b * c;
  const auto la = *F->find_symbol("a"), lb = *F->find_symbol("b");
  EXPECT_EQ(multilinear_stratum(x, {la, lb}), a * b + b * a * Rational(2));
}
