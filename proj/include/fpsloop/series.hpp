#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpsloop/algebra.hpp"

namespace fpsloop {

// Truncated element 1 + a_1 + ... + a_T of the substitution loop, identified
// with the power series t + a_1 t^2 + ... + a_T t^{T+1}. The leading 1 is a
// formal unit and is never stored.
//
// In graded mode over a graded algebra, a_k must be homogeneous of degree k.
// In ungraded mode any coefficient is accepted and the slot index k plays
// the role of the degree.
class Series {
 public:
  Series(AlgebraPtr algebra, int truncation, bool graded_mode);

  static Series unit(AlgebraPtr algebra, int truncation, bool graded_mode);
  // coeffs[k - 1] = a_k; validated like set_coeff.
  static Series from_coefficients(AlgebraPtr algebra, bool graded_mode,
                                  std::vector<AlgElt> coeffs);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  int truncation() const noexcept { return static_cast<int>(coeffs_.size()); }
  bool graded_mode() const noexcept { return graded_mode_; }

  // 1 <= k <= truncation().
  const AlgElt& coeff(int k) const;
  void set_coeff(int k, AlgElt value);

  bool is_unit() const;

  friend bool operator==(const Series& a, const Series& b);

 private:
  AlgebraPtr algebra_;
  bool graded_mode_;
  std::vector<AlgElt> coeffs_;  // coeffs_[k - 1] = a_k
};

// Depth of a series: the first nonzero slot, or infinity for the unit.
struct Depth {
  std::optional<int> value;  // nullopt means infinity

  bool infinite() const noexcept { return !value.has_value(); }
  friend bool operator==(const Depth&, const Depth&) = default;
};

// Substitution product f(g(t)).
Series compose(const Series& f, const Series& g);
// g with compose(f, g) = h.
Series left_divide(const Series& f, const Series& h);
// f with compose(f, g) = h.
Series right_divide(const Series& h, const Series& g);

// a_m * b_n = (m+1) a_m b_n with a formal two-sided unit.
Series star(const Series& f, const Series& g);
Series star_left_divide(const Series& f, const Series& h);
Series star_right_divide(const Series& h, const Series& g);

// a . b := b + a o (1 + b) on the non-unit parts.
Series bullet(const Series& a, const Series& b);

// Part of compose(a, 1 + b) that is linear in the coefficients of b,
// returned as 1 + (that linear part).
Series linearized_composition(const Series& a, const Series& b);

Depth depth(const Series& w);
std::set<std::string> support(const Series& w);

// Coefficientwise (a o b) o c - a o (b o c), stored as the non-unit part of
// the returned series. Unit iff the two bracketings agree.
Series associator_defect(const Series& a, const Series& b, const Series& c);

// Coefficientwise difference x - y on the non-unit parts.
Series difference(const Series& x, const Series& y);

}  // namespace fpsloop
