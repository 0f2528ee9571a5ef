#include <gtest/gtest.h>

#include "fpsloop/error.hpp"
#include "fpsloop/su_brackets.hpp"

using namespace fpsloop;

namespace {

// Stirling numbers of the second kind by the triangle recurrence.
long long stirling2(int n, int k) {
  std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  return s[n][k];
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

AlgebraPtr weighted(const std::vector<int>& xs, int db, int dc) {
  std::vector<Generator> gens;
  int total = db + dc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    gens.push_back({"x" + std::to_string(i + 1), xs[i]});
    total += xs[i];
  }
  gens.push_back({"b", db});
  gens.push_back({"c", dc});
  return Algebra::free_truncated(gens, total);
}

GradedElt gen(const AlgebraPtr& A, const std::string& name, int degree) {
  return make_graded(degree, AlgElt::symbol(A, name));
}

}  // namespace

TEST(Deconcatenations, CountsAreOrderedSetPartitions) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto ds = deconcatenations(n, k);
      EXPECT_EQ(static_cast<long long>(ds.size()), factorial(k) * stirling2(n, k)) << n << "," << k;
      for (const auto& d : ds) {
        std::vector<int> seen(n, 0);
        for (const auto& block : d) {
          ASSERT_FALSE(block.empty());
          EXPECT_TRUE(std::is_sorted(block.begin(), block.end()));
          for (auto p : block) ++seen[p];
        }
        EXPECT_EQ(std::count(seen.begin(), seen.end(), 1), n);
      }
    }
  }
}

TEST(Deconcatenations, Errors) {
  EXPECT_THROW(deconcatenations(2, 3), Error);
  EXPECT_THROW(deconcatenations(2, 0), Error);
}

TEST(NCoefficient, MatchesLeftNormedFold) {
  const std::vector<std::vector<int>> cases{{1}, {2, 1}, {1, 1, 1}, {3, 1, 2}, {2, 2, 2, 1}};
  for (const auto& I : cases) {
    auto A = weighted(I, 1, 1);
    std::vector<GradedElt> xs;
    AlgElt word;
    for (std::size_t i = 0; i < I.size(); ++i) {
      xs.push_back(gen(A, "x" + std::to_string(i + 1), I[i]));
      word = i == 0 ? xs[0].value : word * xs[i].value;
    }
    // x1 * ... * xm = N(I) x1...xm * (last factor contributes no weight)
    const GradedElt folded = left_normed_star(xs);
    Rational partial = 1;
    int sum = 0;
    for (std::size_t i = 0; i + 1 < I.size(); ++i) {
      sum += I[i];
      partial *= sum + 1;
    }
    EXPECT_EQ(folded.value, word * partial);
    EXPECT_EQ(n_coefficient(I), partial * (sum + I.back() + 1));
  }
  EXPECT_EQ(n_coefficient({}), 1);
  EXPECT_THROW(left_normed_star({}), Error);
}

TEST(SuBrackets, BinaryHandValue) {
  auto A = weighted({}, 2, 1);
  const GradedElt b = gen(A, "b", 2), c = gen(A, "c", 1);
  // <b, c> = (|c|+1) cb - (|b|+1) bc
  EXPECT_EQ(sabinin_binary(b, c).value, c.value * b.value * Rational(2) - b.value * c.value * Rational(3));
  EXPECT_EQ(sabinin_binary(b, c).degree, 3);
}

TEST(SuBrackets, PVanishesOnEmptySide) {
  auto A = weighted({1}, 1, 1);
  const GradedElt x = gen(A, "x1", 1), b = gen(A, "b", 1), c = gen(A, "c", 1);
  EXPECT_TRUE(su_p({x}, {}, c).value.is_zero());
  EXPECT_TRUE(su_p({}, {b}, c).value.is_zero());
  EXPECT_THROW(su_p({}, {}, c), Error);
}

TEST(SuBrackets, AntisymmetryInLastTwo) {
  for (const auto& I : std::vector<std::vector<int>>{{1}, {2, 1}, {1, 3, 1}}) {
    auto A = weighted(I, 2, 1);
    std::vector<GradedElt> xs;
    for (std::size_t i = 0; i < I.size(); ++i) xs.push_back(gen(A, "x" + std::to_string(i + 1), I[i]));
    const GradedElt b = gen(A, "b", 2), c = gen(A, "c", 1);
    EXPECT_EQ(sabinin_closed(xs, b, c).value, -sabinin_closed(xs, c, b).value);
    EXPECT_EQ(sabinin_recursive(xs, b, c), sabinin_closed(xs, b, c));
  }
  EXPECT_THROW(sabinin_closed({}, GradedElt{}, GradedElt{}), Error);
}

TEST(SuBrackets, PhiArity) {
  auto A = weighted({1}, 1, 1);
  EXPECT_THROW(multioperator_phi({}, {}), Error);
  const GradedElt x = gen(A, "x1", 1), b = gen(A, "b", 1), c = gen(A, "c", 1);
  // phi(x; b, c) symmetrizes p(x; b; c) over {b, c}.
  const GradedElt want{3, (su_p({x}, {b}, c).value + su_p({x}, {c}, b).value) * make_rational(1, 2)};
  EXPECT_EQ(multioperator_phi({x}, {b, c}), want);
}
