#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpsloop/rational.hpp"

namespace fpsloop {

// A monomial of an algebra. For structure-constant algebras a word has
// exactly one letter (the basis index); for free algebras the letters are
// generator indices and the product is concatenation.
using Letter = char16_t;
using Word = std::u16string;

enum class AlgebraKind { StructureConstants, FreeTruncated };

struct Generator {
  std::string name;
  int degree = 1;
};

// Sparse vector over the basis of a structure-constant algebra.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Structure-constant table: entry (i, j) is the product e_i e_j.
using ProductTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

struct StructureConstantsOptions {
  std::optional<std::vector<int>> grading;
  bool check_associativity = true;
  std::string name = "structure_constants";
};

struct FreeTruncatedOptions {
  // Kill every word in which some generator occurs twice. This is the
  // quotient by a two-sided ideal, so loop computations commute with it;
  // it keeps multilinear-stratum extraction cheap.
  bool multilinear = false;
  std::string name = "free_truncated";
};

// Finite-dimensional associative algebra over Q, immutable after
// construction. Either given by structure constants on a labelled basis or
// free on weighted generators modulo words of weight > max_word_degree.
class Algebra {
 public:
  static AlgebraPtr from_structure_constants(std::vector<std::string> basis_labels,
                                             const ProductTable& table,
                                             StructureConstantsOptions options = {});
  static AlgebraPtr free_truncated(std::vector<Generator> generators, int max_word_degree,
                                   FreeTruncatedOptions options = {});

  AlgebraKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  bool is_free() const noexcept { return kind_ == AlgebraKind::FreeTruncated; }

  // Basis labels (structure constants) or generator names (free).
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t dim() const noexcept;  // structure constants only; 0 for free
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  int max_word_degree() const noexcept { return max_word_degree_; }
  bool multilinear() const noexcept { return multilinear_; }

  bool graded() const noexcept { return is_free() || grading_.has_value(); }
  const std::optional<std::vector<int>>& grading() const noexcept { return grading_; }
  // Index of a two-sided identity basis element, if the basis contains one.
  std::optional<std::size_t> unit_index() const noexcept { return unit_index_; }
  bool unital() const noexcept { return unit_index_.has_value(); }

  std::optional<int> word_degree(const Word& w) const;
  std::optional<Letter> find_symbol(std::string_view label) const;
  std::string word_to_string(const Word& w) const;

  // Accumulates coeff * (u v) into out.
  void multiply_words(const Word& u, const Word& v, const Rational& coeff,
                      std::map<Word, Rational>& out) const;

  // Every basis monomial: single letters for structure constants, all words
  // of weight <= max_word_degree (shortlex) for free algebras.
  std::vector<Word> basis() const;
  // Basis monomials of the given degree (graded algebras only).
  std::vector<Word> basis_of_degree(int degree) const;

  const SparseVector& table_entry(std::size_t i, std::size_t j) const;

 private:
  Algebra() = default;
  void verify_associativity() const;
  void verify_grading() const;
  void detect_unit();

  AlgebraKind kind_ = AlgebraKind::StructureConstants;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;  // dim * dim, row-major
  std::optional<std::vector<int>> grading_;
  std::optional<std::size_t> unit_index_;
  std::vector<Generator> generators_;
  int max_word_degree_ = 0;
  bool multilinear_ = false;
};

// Sparse Q-linear combination of basis monomials of one algebra.
class AlgElt {
 public:
  AlgElt() = default;
  explicit AlgElt(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  static AlgElt monomial(AlgebraPtr algebra, Word w, Rational coeff = 1);
  // Basis element (structure constants) or generator (free) with this label.
  static AlgElt symbol(const AlgebraPtr& algebra, std::string_view label);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::map<Word, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const Word& w, const Rational& c);
  Rational coefficient(const Word& w) const;

  // Degree when every term has the same degree; nullopt for zero, mixed
  // degrees or ungraded algebras.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous_of(int degree) const;
  // Homogeneous component of the given degree (graded algebras).
  AlgElt component(int degree) const;

  AlgElt& operator+=(const AlgElt& other);
  AlgElt& operator-=(const AlgElt& other);
  AlgElt& operator*=(const Rational& scalar);
  AlgElt operator-() const;

  friend AlgElt operator+(AlgElt a, const AlgElt& b) { return a += b; }
  friend AlgElt operator-(AlgElt a, const AlgElt& b) { return a -= b; }
  friend AlgElt operator*(AlgElt a, const Rational& s) { return a *= s; }
  friend AlgElt operator*(const Rational& s, AlgElt a) { return a *= s; }
  friend AlgElt operator*(const AlgElt& a, const AlgElt& b);
  friend bool operator==(const AlgElt& a, const AlgElt& b);

  // "0", or terms like "2*a*b - (1/2)*b*a".
  std::string to_string() const;

 private:
  void adopt(const AlgElt& other);

  AlgebraPtr algebra_;
  std::map<Word, Rational> terms_;
};

AlgElt commutator(const AlgElt& x, const AlgElt& y);

struct CommIdealReport {
  bool s_brackets_zero = false;   // x[y,z] = 0 for all basis x, y, z
  bool brackets_s3_zero = false;  // [x,y]uvw = 0 for all basis x, y, u, v, w
};

CommIdealReport check_s_comm_ideal(const AlgebraPtr& algebra);

// Built-in algebras.
namespace builtin {

// Strictly upper triangular n x n matrices, E_{i,i+k} in degree k.
AlgebraPtr upper_triangular(int n);
// K[e]/(e^{n+1} - e^n) extended by the bimodule M = span{v^0..v^{n-1}}.
// Basis labels e0 (the unit), e1..en, v0..v{n-1}. Ungraded.
AlgebraPtr split_null(int n);
// K e + K v with e^2 = e, ev = 0, ve = v, v^2 = 0. Ungraded.
AlgebraPtr ev_algebra();
// t^i for a <= i <= b with t^i t^j = t^{i+j} or 0 outside the window.
// Graded by deg t^i = i. Labels t0, t1, tm1 (= t^-1), ...
AlgebraPtr laurent_window(int a, int b);
// One-dimensional copy of the ground field.
AlgebraPtr scalar();
// Free algebra on generators named g with degree 1 each.
AlgebraPtr free_algebra(std::vector<std::string> names, int max_word_degree);

// "ut:3", "split_null:2", "ev", "laurent:-4:4", "scalar",
// "free:a,b,c:3" (all generators of degree 1).
AlgebraPtr from_spec(std::string_view spec);

std::string laurent_label(int exponent);

}  // namespace builtin

}  // namespace fpsloop
