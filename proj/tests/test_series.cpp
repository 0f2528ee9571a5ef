#include <gtest/gtest.h>

#include <functional>

#include "fpsloop/error.hpp"
#include "fpsloop/io.hpp"
#include "fpsloop/random.hpp"
#include "fpsloop/series.hpp"

using namespace fpsloop;

namespace {

// f(g(t)) by enumerating, for each m, all (m+1)-tuples of slots of g with
// the right total; slot 0 of g is the leading 1.
Series literal_compose(const Series& f, const Series& g) {
  const int T = f.truncation();
  auto A = f.algebra();
  auto g_at = [&](int j) { return j == 0 ? AlgElt() : g.coeff(j); };
  Series out(A, T, f.graded_mode());
  for (int k = 1; k <= T; ++k) {
    AlgElt sum = g.coeff(k);
    for (int m = 1; m <= k; ++m) {
      if (f.coeff(m).is_zero()) continue;
      // Tuples (j_0..j_m) of nonnegative slots summing to k - m.
      std::vector<int> js(m + 1, 0);
      std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == m) {
          js[pos] = left;
          AlgElt prod = f.coeff(m);
          for (int j : js) {
            if (j > 0) prod = prod * g_at(j);
          }
          sum += prod;
          return;
        }
        for (int j = 0; j <= left; ++j) {
          js[pos] = j;
          rec(pos + 1, left - j);
        }
      };
      rec(0, k - m);
    }
    out.set_coeff(k, sum);
  }
  return out;
}

Series parse(const AlgebraPtr& A, const char* text, int T) { return parse_series(text, A, T, A->graded()); }

}  // namespace

TEST(Series, ComposeMatchesLiteralEnumeration) {
  Rng rng(7);
  for (const auto& [alg, graded] :
       std::vector<std::pair<AlgebraPtr, bool>>{{builtin::free_algebra({"a", "b"}, 5), true},
                                                 {builtin::split_null(2), false},
                                                 {builtin::upper_triangular(3), true}}) {
    for (int s = 0; s < 25; ++s) {
      const Series f = random_series(alg, 5, graded, rng);
      const Series g = random_series(alg, 5, graded, rng);
      EXPECT_EQ(compose(f, g), literal_compose(f, g)) << alg->name();
    }
  }
}

TEST(Series, HandComposition) {
  auto F = builtin::free_algebra({"a", "b"}, 3);
  // (t + a t^2)(t + b t^2) = t + b t^2 + a (t + b t^2)^2
  const Series got = compose(parse(F, "t + a*t^2", 3), parse(F, "t + b*t^2", 3));
  EXPECT_EQ(print_series(got), "t + a*t^2 + b*t^2 + 2*a*b*t^3 + a*b*b*t^4");
}

TEST(Series, DivisionsInvertComposition) {
  Rng rng(11);
  auto F = builtin::free_algebra({"a", "b"}, 5);
  for (int s = 0; s < 20; ++s) {
    const Series f = random_series(F, 5, true, rng), g = random_series(F, 5, true, rng);
    const Series h = compose(f, g);
    EXPECT_EQ(left_divide(f, h), g);
    EXPECT_EQ(right_divide(h, g), f);
    EXPECT_EQ(star_left_divide(f, star(f, g)), g);
    EXPECT_EQ(star_right_divide(star(f, g), g), f);
  }
}

TEST(Series, StarHandValues) {
  auto F = builtin::free_algebra({"a", "b"}, 4);
  // (1 + a_1) * (1 + b_2) = 1 + a + b + 2ab
  const Series got = star(parse(F, "t + a*t^2", 4), parse(F, "t + b*b*t^3", 4));
  EXPECT_EQ(print_series(got), "t + a*t^2 + b*b*t^3 + 2*a*b*b*t^4");
}

TEST(Series, BulletIsShiftedComposition) {
  Rng rng(3);
  auto F = builtin::free_algebra({"a", "b"}, 4);
  for (int s = 0; s < 10; ++s) {
    const Series a = random_series(F, 4, true, rng), b = random_series(F, 4, true, rng);
    // a . b = b + a o (1 + b): the non-unit part of compose(a, b).
    EXPECT_EQ(bullet(a, b), compose(a, b));
  }
}

TEST(Series, DepthAndSupport) {
  auto F = builtin::free_algebra({"a", "b"}, 4);
  EXPECT_TRUE(depth(Series::unit(F, 4, true)).infinite());
  EXPECT_EQ(depth(parse(F, "t + a*b*t^3", 4)).value, 2);
  EXPECT_EQ(support(parse(F, "t + a*b*t^3 + b*t^2", 4)), (std::set<std::string>{"a", "b"}));
  auto U = builtin::upper_triangular(3);
  EXPECT_THROW(support(Series::unit(U, 2, true)), Error);
}

TEST(Series, Validation) {
  auto F = builtin::free_algebra({"a", "b"}, 3);
  auto G = builtin::free_algebra({"a", "b"}, 3);
  Series s(F, 3, true);
  EXPECT_THROW(s.set_coeff(2, AlgElt::symbol(F, "a")), Error);  // grading
  EXPECT_THROW(s.set_coeff(4, AlgElt::symbol(F, "a")), Error);  // index
  EXPECT_THROW(s.set_coeff(1, AlgElt::symbol(G, "a")), Error);  // algebra
  EXPECT_THROW(compose(Series(F, 3, true), Series(F, 2, true)), Error);
}

TEST(Series, AssociatorDefectHandValue) {
  auto F = builtin::free_algebra({"a", "b", "g"}, 3);
  const Series d = associator_defect(parse(F, "t + a*t^2", 3), parse(F, "t + b*t^2", 3),
                                     parse(F, "t + g*t^2", 3));
  EXPECT_EQ(print_series(d), "t + a*b*g*t^4 - a*g*b*t^4");
}
