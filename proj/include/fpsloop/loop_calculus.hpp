#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpsloop/series.hpp"
#include "fpsloop/su_brackets.hpp"

namespace fpsloop {

// [a, b] = (b o a) \ (a o b). Its leading term for a = 1 + x (slot i) and
// b = 1 + y (slot j) is (i+1)xy - (j+1)yx, so the binary bracket <y, z>
// corresponds to [z, y].
Series loop_commutator(const Series& a, const Series& b);
// (a, b, c) = (a o (b o c)) \ ((a o b) o c).
Series loop_associator(const Series& a, const Series& b, const Series& c);

enum class DeviationBase { Commutator, Associator };

// Iterated deviation of a commutator or associator. Step j splits slot
// indices[j-1] of the previous word w into two arguments y, z and evaluates
// (w[y] o w[z]) \ w[y o z].
struct DeviationExpr {
  DeviationBase base = DeviationBase::Associator;
  std::vector<int> indices;

  int arity() const;
  // Throws BadIndex unless 1 <= indices[j-1] <= base arity + j - 1.
  void validate() const;
  std::string to_string() const;
};

Series deviation_apply(const DeviationExpr& expr, const std::vector<Series>& args);

// Index pattern of P_{n,m}: n - 1 ones followed by m - 1 copies of n + 1.
DeviationExpr p_nm_expr(int n, int m);
Series p_nm(const std::vector<Series>& xs, const std::vector<Series>& ys, const Series& z);

// Terms of x whose word contains each listed letter exactly once and
// nothing else.
AlgElt multilinear_stratum(const AlgElt& x, const std::vector<Letter>& letters);

struct FiltrationBracket {
  AlgebraPtr algebra;            // free, multilinear quotient
  std::vector<GradedElt> xs;     // alpha_1 .. alpha_n
  GradedElt y;                   // beta
  GradedElt z;                   // gamma
  GradedElt value;               // <xs; y, z> read off the loop
};

// <x_1..x_n; y, z> = p_{n,1}(xs; z; y) - p_{n,1}(xs; y; z) evaluated on
// x_i = 1 + alpha_i (slot d_i), y = 1 + beta, z = 1 + gamma over a free
// algebra, reduced to the multilinear stratum in total degree. With n = 0
// the binary bracket is read off the commutator [z, y] instead.
FiltrationBracket filtration_bracket(const std::vector<int>& degrees, int deg_y, int deg_z,
                                     int truncation);

struct NSequenceReport {
  bool pass = true;
  int samples = 0;
  int failures = 0;
  std::optional<int> min_slack;  // nullopt when every result was the unit
  std::string first_failure;
};

NSequenceReport n_sequence_check(const DeviationExpr& expr, const std::vector<int>& depths,
                                 const AlgebraPtr& algebra, int truncation, int samples,
                                 std::uint64_t seed);

struct AbsorptionWitness {
  Series commutator;
  AlgElt coefficient;  // slot n + i
};

// [t + beta t^{i+1}, t + alpha t^{n+1}] over the ungraded loop.
AbsorptionWitness absorption_witness(const AlgElt& alpha, const AlgElt& beta, int n, int i,
                                     int truncation);

enum class KlopschTarget { AB, BA };

struct KlopschSolution {
  Rational lambda;
  Rational mu;
};

// lambda, mu making the slot-m coefficient of [a, A] o [b, B] equal to
// alpha*beta (AB) or beta*alpha (BA), where a = t + lambda beta t^{m-n+1},
// b = t + mu beta t^{m-n}, A = t + alpha t^{n+1}, B = t + alpha t^{n+2}.
// Requires n >= 1 and m >= n + 2.
KlopschSolution klopsch_witness(int n, int m, KlopschTarget target);

// Evaluates [a, A] o [b, B] over the free algebra on alpha, beta and returns
// its slot-m coefficient.
AlgElt klopsch_verify(int n, int m, const Rational& lambda, const Rational& mu);

}  // namespace fpsloop
