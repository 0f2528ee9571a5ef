#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpsloop/algebra.hpp"
#include "fpsloop/su_brackets.hpp"

namespace fpsloop {

// Polynomial in t with coefficients in an associative algebra; t is central.
class CoeffPoly {
 public:
  CoeffPoly() = default;
  explicit CoeffPoly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  // c t^k
  static CoeffPoly monomial(const AlgElt& c, int k);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::map<int, AlgElt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  AlgElt coeff(int k) const;
  void add_term(int k, const AlgElt& c);

  CoeffPoly derivative() const;

  CoeffPoly& operator+=(const CoeffPoly& other);
  CoeffPoly& operator-=(const CoeffPoly& other);
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator*(CoeffPoly a, const Rational& s);
  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b);

  // "(e)*t^2 + (v)*t" style, highest power first; "0" for zero.
  std::string to_string() const;

 private:
  void adopt(const CoeffPoly& other);

  AlgebraPtr algebra_;
  std::map<int, AlgElt> terms_;
};

// <f, g> = g' f - f' g.
CoeffPoly wronskian_bracket(const CoeffPoly& f, const CoeffPoly& g);

// <x, y> = (deg y + 1) yx - (deg x + 1) xy on homogeneous elements of a
// graded algebra; on a Laurent window this is the Witt bracket.
AlgElt graded_binary_bracket(const AlgElt& x, const AlgElt& y);

enum class BracketKind { Wronskian, SabininBinary, CustomTable };

// Finite-dimensional bracket algebra given by a table of brackets of basis
// elements. Nothing is assumed about the table; jacobi_check decides.
class LieTable {
 public:
  using Elt = std::map<std::size_t, Rational>;

  LieTable(std::vector<std::string> labels,
           std::map<std::pair<std::size_t, std::size_t>, Elt> table);

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  struct Element {
    const LieTable* table = nullptr;
    Elt terms;

    bool is_zero() const noexcept { return terms.empty(); }
    std::string to_string() const;
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend bool operator==(const Element& a, const Element& b) { return a.terms == b.terms; }
  };

  Element basis(std::size_t i) const;
  Element bracket(const Element& x, const Element& y) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::pair<std::size_t, std::size_t>, Elt> table_;
};

struct IdentityReport {
  bool pass = true;
  long long checked = 0;
  std::vector<std::string> witness;  // arguments of the first failure
  std::string value;                 // its nonzero value
  std::string note;                  // which identity failed, if any

  const char* status() const noexcept { return pass ? "PASS" : "FAIL"; }
};

// St_{n+1}(x_1..x_n, z) = sum over sigma of sign(sigma) [x_s1, [.., [x_sn, z]]]
// as a literal sum over all n! permutations. z is not alternated.
template <class E, class Bracket>
E standard_identity(const Bracket& bracket, const std::vector<E>& xs, const E& z) {
  std::vector<std::size_t> perm(xs.size());
  std::iota(perm.begin(), perm.end(), 0);
  E total = z - z;
  do {
    E acc = z;
    for (std::size_t k = perm.size(); k-- > 0;) acc = bracket(xs[perm[k]], acc);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    if (inversions % 2 == 0) {
      total += acc;
    } else {
      total -= acc;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// St_n with n - 1 alternated arguments over the Wronskian algebra S[t],
// spanned by b t^k for basis b and 0 <= k <= degree_bound. Every z in the
// spanning set is paired with every increasing (n-1)-subset of it.
IdentityReport check_st_identity(const AlgebraPtr& algebra, int n, int degree_bound);

std::vector<CoeffPoly> wronskian_spanning_set(const AlgebraPtr& algebra, int degree_bound);

// Antisymmetry on all pairs and Jacobi on all triples of the spanning set.
// The optional filter restricts the Jacobi triples.
template <class E, class Bracket>
IdentityReport jacobi_check(
    const Bracket& bracket, const std::vector<E>& span,
    const std::function<bool(std::size_t, std::size_t, std::size_t)>& keep = {}) {
  IdentityReport report;
  auto fail = [&](std::string note, std::vector<std::string> witness, const E& value) {
    report.pass = false;
    report.note = std::move(note);
    report.witness = std::move(witness);
    report.value = value.to_string();
  };
  for (std::size_t i = 0; i < span.size(); ++i) {
    for (std::size_t j = 0; j < span.size(); ++j) {
      ++report.checked;
      const E sum = bracket(span[i], span[j]) + bracket(span[j], span[i]);
      if (!sum.is_zero()) {
        fail("antisymmetry", {span[i].to_string(), span[j].to_string()}, sum);
        return report;
      }
    }
  }
  for (std::size_t i = 0; i < span.size(); ++i) {
    for (std::size_t j = 0; j < span.size(); ++j) {
      for (std::size_t k = 0; k < span.size(); ++k) {
        if (keep && !keep(i, j, k)) continue;
        ++report.checked;
        const E& x = span[i];
        const E& y = span[j];
        const E& z = span[k];
        const E sum = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                      bracket(z, bracket(x, y));
        if (!sum.is_zero()) {
          fail("jacobi", {x.to_string(), y.to_string(), z.to_string()}, sum);
          return report;
        }
      }
    }
  }
  return report;
}

struct SabininAxiomsOptions {
  int max_arity = 3;             // longest argument list before the semicolon
  std::vector<int> degrees{0, 1};  // positional degrees for ungraded algebras
  // Skip tuples whose degree subset sums leave the algebra's degree range
  // (for truncated windows such as the Laurent builtin).
  bool window = false;
};

struct SabininAxiomsReport {
  IdentityReport antisymmetry;
  IdentityReport exchange;
  IdentityReport cyclic;

  bool pass() const noexcept { return antisymmetry.pass && exchange.pass && cyclic.pass; }
};

// <xs; y, z> with the empty list meaning the binary bracket <y, z>.
GradedElt sabinin_bracket(const std::vector<GradedElt>& xs, const GradedElt& y,
                          const GradedElt& z);

// Antisymmetry, two-term exchange and cyclic axioms for the closed-form
// brackets on homogeneous basis tuples.
SabininAxiomsReport sabinin_axioms_check(const AlgebraPtr& algebra,
                                         const SabininAxiomsOptions& options = {});

}  // namespace fpsloop
