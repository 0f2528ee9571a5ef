#include "fpsloop/lie_identities.hpp"

#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "fpsloop/error.hpp"

namespace fpsloop {

// --- CoeffPoly --------------------------------------------------------------

CoeffPoly CoeffPoly::monomial(const AlgElt& c, int k) {
  if (k < 0) throw Error(ErrorCode::BadParams, "negative power of t");
  CoeffPoly out(c.algebra());
  out.add_term(k, c);
  return out;
}

AlgElt CoeffPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? AlgElt(algebra_) : it->second;
}

void CoeffPoly::add_term(int k, const AlgElt& c) {
  if (c.is_zero()) return;
  if (!algebra_) algebra_ = c.algebra();
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CoeffPoly::adopt(const CoeffPoly& other) {
  if (!algebra_) {
    algebra_ = other.algebra_;
  } else if (other.algebra_ && other.algebra_ != algebra_) {
    throw Error(ErrorCode::AlgebraMismatch, "polynomials over different algebras");
  }
}

CoeffPoly CoeffPoly::derivative() const {
  CoeffPoly out(algebra_);
  for (const auto& [k, c] : terms_) {
    if (k > 0) out.terms_.emplace(k - 1, c * Rational(k));
  }
  return out;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& other) {
  adopt(other);
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& other) {
  adopt(other);
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly out(a.algebra_);
  out.adopt(b);
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) out.add_term(i + j, x * y);
  }
  return out;
}

CoeffPoly operator*(CoeffPoly a, const Rational& s) {
  if (s == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [k, c] : a.terms_) c *= s;
  return a;
}

bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.terms_ == b.terms_; }

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << "(" << it->second.to_string() << ")";
    if (it->first == 1) {
      out << "*t";
    } else if (it->first > 1) {
      out << "*t^" << it->first;
    }
  }
  return out.str();
}

CoeffPoly wronskian_bracket(const CoeffPoly& f, const CoeffPoly& g) {
  return g.derivative() * f - f.derivative() * g;
}

AlgElt graded_binary_bracket(const AlgElt& x, const AlgElt& y) {
  if (x.is_zero() || y.is_zero()) return AlgElt(x.algebra() ? x.algebra() : y.algebra());
  const auto dx = x.homogeneous_degree();
  const auto dy = y.homogeneous_degree();
  if (!dx || !dy) {
    throw Error(ErrorCode::GradingViolation, "binary bracket needs homogeneous arguments");
  }
  return sabinin_binary(GradedElt{*dx, x}, GradedElt{*dy, y}).value;
}

// --- LieTable ---------------------------------------------------------------

LieTable::LieTable(std::vector<std::string> labels,
                   std::map<std::pair<std::size_t, std::size_t>, Elt> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  for (const auto& [key, value] : table_) {
    if (key.first >= labels_.size() || key.second >= labels_.size()) {
      throw Error(ErrorCode::BadIndex, "bracket table index out of range");
    }
    for (const auto& [k, c] : value) {
      if (k >= labels_.size()) throw Error(ErrorCode::BadIndex, "bracket table index out of range");
    }
  }
}

LieTable::Element LieTable::basis(std::size_t i) const {
  if (i >= labels_.size()) throw Error(ErrorCode::BadIndex, "basis index out of range");
  return Element{this, {{i, Rational(1)}}};
}

LieTable::Element LieTable::bracket(const Element& x, const Element& y) const {
  Element out{this, {}};
  for (const auto& [i, a] : x.terms) {
    for (const auto& [j, b] : y.terms) {
      auto it = table_.find({i, j});
      if (it == table_.end()) continue;
      for (const auto& [k, c] : it->second) {
        Rational& slot = out.terms[k];
        slot += a * b * c;
        if (slot == 0) out.terms.erase(k);
      }
    }
  }
  return out;
}

LieTable::Element& LieTable::Element::operator+=(const Element& other) {
  if (!table) table = other.table;
  for (const auto& [k, c] : other.terms) {
    Rational& slot = terms[k];
    slot += c;
    if (slot == 0) terms.erase(k);
  }
  return *this;
}

LieTable::Element& LieTable::Element::operator-=(const Element& other) {
  if (!table) table = other.table;
  for (const auto& [k, c] : other.terms) {
    Rational& slot = terms[k];
    slot -= c;
    if (slot == 0) terms.erase(k);
  }
  return *this;
}

std::string LieTable::Element::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    Rational mag = abs(c);
    if (mag != 1) out << fpsloop::to_string(mag) << "*";
    out << (table ? table->labels()[k] : "#" + std::to_string(k));
  }
  return out.str();
}

// --- Standard identities ----------------------------------------------------

std::vector<CoeffPoly> wronskian_spanning_set(const AlgebraPtr& algebra, int degree_bound) {
  if (degree_bound < 0) throw Error(ErrorCode::BadParams, "degree bound must be >= 0");
  std::vector<CoeffPoly> span;
  for (const Word& w : algebra->basis()) {
    for (int k = 0; k <= degree_bound; ++k) {
      span.push_back(CoeffPoly::monomial(AlgElt::monomial(algebra, w), k));
    }
  }
  return span;
}

IdentityReport check_st_identity(const AlgebraPtr& algebra, int n, int degree_bound) {
  if (n < 2 || n > 7) throw Error(ErrorCode::BadParams, "St_n supported for 2 <= n <= 7");
  const std::vector<CoeffPoly> span = wronskian_spanning_set(algebra, degree_bound);
  if (span.size() > 63) throw Error(ErrorCode::BadParams, "spanning set too large");
  const std::size_t arity = static_cast<std::size_t>(n - 1);
  IdentityReport report;
  if (span.size() < arity) return report;

  for (std::size_t zi = 0; zi < span.size(); ++zi) {
    const CoeffPoly& z = span[zi];
    // F(S) = sum_j (-1)^j [s_j, F(S \ s_j)] over S in increasing order;
    // F of the full tuple is St_n(S, z).
    std::unordered_map<std::uint64_t, CoeffPoly> memo;
    std::function<const CoeffPoly&(std::uint64_t)> F = [&](std::uint64_t mask) -> const CoeffPoly& {
      if (auto it = memo.find(mask); it != memo.end()) return it->second;
      CoeffPoly acc(algebra);
      if (mask == 0) {
        acc = z;
      } else {
        int pos = 0;
        for (std::size_t j = 0; j < span.size(); ++j) {
          if (!(mask & (std::uint64_t{1} << j))) continue;
          const CoeffPoly& rest = F(mask & ~(std::uint64_t{1} << j));
          if (!rest.is_zero()) {
            CoeffPoly term = wronskian_bracket(span[j], rest);
            if (pos % 2 == 0) {
              acc += term;
            } else {
              acc -= term;
            }
          }
          ++pos;
        }
      }
      return memo.emplace(mask, std::move(acc)).first->second;
    };

    std::vector<std::size_t> idx(arity);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::uint64_t mask = 0;
      for (auto i : idx) mask |= std::uint64_t{1} << i;
      ++report.checked;
      const CoeffPoly& value = F(mask);
      if (!value.is_zero()) {
        report.pass = false;
        report.note = "St" + std::to_string(n);
        for (auto i : idx) report.witness.push_back(span[i].to_string());
        report.witness.push_back(z.to_string());
        report.value = value.to_string();
        return report;
      }
      // Next increasing tuple.
      std::size_t k = arity;
      while (k > 0 && idx[k - 1] == span.size() - arity + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t m = k; m < arity; ++m) idx[m] = idx[m - 1] + 1;
    }
  }
  return report;
}

// --- Sabinin axioms ---------------------------------------------------------

GradedElt sabinin_bracket(const std::vector<GradedElt>& xs, const GradedElt& y,
                          const GradedElt& z) {
  return xs.empty() ? sabinin_binary(y, z) : sabinin_closed(xs, y, z);
}

namespace {

GradedElt add(GradedElt a, const GradedElt& b) {
  a.value += b.value;
  return a;
}

GradedElt sub(GradedElt a, const GradedElt& b) {
  a.value -= b.value;
  return a;
}

// Calls f(first, second) for every (k, r-k) shuffle of xs, k = 0..r.
template <class F>
void for_each_shuffle(const std::vector<GradedElt>& xs, F&& f) {
  const std::size_t r = xs.size();
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::vector<GradedElt> first, second;
    for (std::size_t i = 0; i < r; ++i) {
      ((mask >> i) & 1u ? first : second).push_back(xs[i]);
    }
    f(first, second);
  }
}

std::string describe(const std::vector<GradedElt>& tuple) {
  std::string out;
  for (const auto& g : tuple) {
    if (!out.empty()) out += ", ";
    out += "(" + g.value.to_string() + ")_" + std::to_string(g.degree);
  }
  return out;
}

class AxiomRunner {
 public:
  AxiomRunner(const AlgebraPtr& algebra, const SabininAxiomsOptions& options)
      : options_(options) {
    const auto& grading = algebra->grading();
    for (const Word& w : algebra->basis()) {
      AlgElt e = AlgElt::monomial(algebra, w);
      if (algebra->graded()) {
        pool_.push_back(GradedElt{*algebra->word_degree(w), e});
      } else {
        for (int d : options.degrees) pool_.push_back(GradedElt{d, e});
      }
    }
    if (options.window && grading && !grading->empty()) {
      lo_ = *std::min_element(grading->begin(), grading->end());
      hi_ = *std::max_element(grading->begin(), grading->end());
    }
  }

  // Runs check over all tuples of the given size; stops at the first failure.
  template <class Check>
  void over_tuples(std::size_t size, IdentityReport& report, const char* name, Check&& check) {
    if (!report.pass || pool_.empty()) return;
    std::vector<std::size_t> idx(size, 0);
    while (true) {
      std::vector<GradedElt> tuple;
      for (auto i : idx) tuple.push_back(pool_[i]);
      if (in_window(tuple)) {
        ++report.checked;
        GradedElt value = check(tuple);
        if (!value.value.is_zero()) {
          report.pass = false;
          report.note = name;
          report.witness.push_back(describe(tuple));
          report.value = value.value.to_string();
          return;
        }
      }
      std::size_t pos = 0;
      while (pos < size && ++idx[pos] == pool_.size()) idx[pos++] = 0;
      if (pos == size) return;
    }
  }

 private:
  bool in_window(const std::vector<GradedElt>& tuple) const {
    if (!lo_) return true;
    for (std::uint32_t mask = 1; mask < (1u << tuple.size()); ++mask) {
      int sum = 0;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if ((mask >> i) & 1u) sum += tuple[i].degree;
      }
      if (sum < *lo_ || sum > *hi_) return false;
    }
    return true;
  }

  const SabininAxiomsOptions& options_;
  std::vector<GradedElt> pool_;
  std::optional<int> lo_, hi_;
};

}  // namespace

SabininAxiomsReport sabinin_axioms_check(const AlgebraPtr& algebra,
                                         const SabininAxiomsOptions& options) {
  if (options.max_arity < 0 || options.max_arity > 4) {
    throw Error(ErrorCode::BadParams, "max arity must lie in 0..4");
  }
  const std::size_t max_arity = static_cast<std::size_t>(options.max_arity);
  AxiomRunner runner(algebra, options);
  SabininAxiomsReport report;

  // <xs; y, z> + <xs; z, y> = 0
  for (std::size_t m = 0; m <= max_arity; ++m) {
    runner.over_tuples(m + 2, report.antisymmetry, "antisymmetry", [&](const auto& t) {
      std::vector<GradedElt> xs(t.begin(), t.begin() + m);
      return add(sabinin_bracket(xs, t[m], t[m + 1]), sabinin_bracket(xs, t[m + 1], t[m]));
    });
  }

  // <x_1..x_r, a, b, x_{r+1}..x_m; y, z> - <.., b, a, ..; y, z>
  //   + sum_k sum_alpha <x_a1..x_ak, <x_a(k+1)..x_ar; a, b>, x_{r+1}..x_m; y, z> = 0
  for (std::size_t len = 2; len <= max_arity; ++len) {
    for (std::size_t r = 0; r + 2 <= len; ++r) {
      runner.over_tuples(len + 2, report.exchange, "exchange", [&](const auto& t) {
        const std::vector<GradedElt> head(t.begin(), t.begin() + r);
        const GradedElt& a = t[r];
        const GradedElt& b = t[r + 1];
        const std::vector<GradedElt> tail(t.begin() + r + 2, t.begin() + len);
        const GradedElt& y = t[len];
        const GradedElt& z = t[len + 1];
        std::vector<GradedElt> ab(head), ba(head);
        ab.push_back(a);
        ab.push_back(b);
        ba.push_back(b);
        ba.push_back(a);
        ab.insert(ab.end(), tail.begin(), tail.end());
        ba.insert(ba.end(), tail.begin(), tail.end());
        GradedElt total = sub(sabinin_bracket(ab, y, z), sabinin_bracket(ba, y, z));
        for_each_shuffle(head, [&](const auto& first, const auto& second) {
          std::vector<GradedElt> args(first);
          args.push_back(sabinin_bracket(second, a, b));
          args.insert(args.end(), tail.begin(), tail.end());
          total = add(total, sabinin_bracket(args, y, z));
        });
        return total;
      });
    }
  }

  // cyclic sum over (x, y, z) of
  //   <x_1..x_r, x; y, z> + sum_k sum_alpha <x_a1..x_ak; <x_a(k+1)..x_ar; y, z>, x>
  for (std::size_t r = 0; r + 1 <= max_arity; ++r) {
    runner.over_tuples(r + 3, report.cyclic, "cyclic", [&](const auto& t) {
      const std::vector<GradedElt> head(t.begin(), t.begin() + r);
      GradedElt total{0, AlgElt(algebra)};
      for (int rot = 0; rot < 3; ++rot) {
        const GradedElt& x = t[r + rot % 3];
        const GradedElt& y = t[r + (rot + 1) % 3];
        const GradedElt& z = t[r + (rot + 2) % 3];
        std::vector<GradedElt> xs(head);
        xs.push_back(x);
        total = add(total, sabinin_bracket(xs, y, z));
        for_each_shuffle(head, [&](const auto& first, const auto& second) {
          total = add(total, sabinin_bracket(first, sabinin_bracket(second, y, z), x));
        });
      }
      return total;
    });
  }
  return report;
}

}  // namespace fpsloop
