#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fpsloop/algebra.hpp"

namespace fpsloop {

// Element with a positional degree. The degree drives the star product and
// need not come from the algebra's grading; over a graded algebra it is
// checked against the value by make_graded.
struct GradedElt {
  int degree = 0;
  AlgElt value;

  friend bool operator==(const GradedElt&, const GradedElt&) = default;
};

GradedElt make_graded(int degree, AlgElt value);

// Positions 0..length-1 assigned to k ordered nonempty blocks, each block
// listed in increasing order. There are k! S(length, k) of them.
using Block = std::vector<std::size_t>;
using Deconcatenation = std::vector<Block>;

std::vector<Deconcatenation> deconcatenations(std::size_t length, std::size_t k);

// (i1 + 1)(i1 + i2 + 1)...(i1 + ... + im + 1); 1 for the empty index.
Rational n_coefficient(const std::vector<int>& degrees);

// x * y = (deg x + 1) xy in degree deg x + deg y.
GradedElt star_graded(const GradedElt& x, const GradedElt& y);
// ((x1 * x2) * ...) * xm. Throws EmptyArgs on an empty list; callers that
// want the formal unit handle it themselves.
GradedElt left_normed_star(const std::vector<GradedElt>& xs);

// p(xs; ys; z) from the fundamental formula, solved by recursion on
// l(xs) + l(ys) with p = 0 whenever xs or ys is empty.
GradedElt su_p(const std::vector<GradedElt>& xs, const std::vector<GradedElt>& ys,
               const GradedElt& z);

// <a, b> = b * a - a * b.
GradedElt sabinin_binary(const GradedElt& a, const GradedElt& b);

// Closed form of <xs; b, c> as a sum over deconcatenations of xs.
GradedElt sabinin_closed(const std::vector<GradedElt>& xs, const GradedElt& b,
                         const GradedElt& c);

// <xs; b, c> = p(xs; c; b) - p(xs; b; c).
GradedElt sabinin_recursive(const std::vector<GradedElt>& xs, const GradedElt& b,
                            const GradedElt& c);

// Symmetrization of p over both argument groups, divided by m! (n+1)!.
// ys holds b_1..b_{n+1}; the last one fills the z slot of p.
GradedElt multioperator_phi(const std::vector<GradedElt>& xs,
                            const std::vector<GradedElt>& ys);

}  // namespace fpsloop
