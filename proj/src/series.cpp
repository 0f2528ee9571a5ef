#include "fpsloop/series.hpp"

#include "fpsloop/error.hpp"

namespace fpsloop {

namespace {

// Slots 1..T of a series whose slot 0 is the formal unit; index 0 unused.
using Slots = std::vector<AlgElt>;

void check_compatible(const Series& a, const Series& b) {
  if (a.algebra() != b.algebra()) {
    throw Error(ErrorCode::AlgebraMismatch, "series over different algebras");
  }
  if (a.truncation() != b.truncation()) {
    throw Error(ErrorCode::TruncationMismatch,
                "truncations " + std::to_string(a.truncation()) + " and " +
                    std::to_string(b.truncation()) + " differ");
  }
}

Slots slots_of(const Series& s) {
  Slots out(s.truncation() + 1, AlgElt(s.algebra()));
  for (int k = 1; k <= s.truncation(); ++k) out[k] = s.coeff(k);
  return out;
}

Series from_slots(const AlgebraPtr& alg, bool graded, Slots slots) {
  std::vector<AlgElt> coeffs(std::make_move_iterator(slots.begin() + 1),
                             std::make_move_iterator(slots.end()));
  return Series::from_coefficients(alg, graded, std::move(coeffs));
}

// (1 + a)(1 + b) truncated at slot T, returned without the unit.
Slots unit_product(const Slots& a, const Slots& b, int T) {
  Slots out(T + 1, AlgElt(a[0].algebra()));
  for (int k = 1; k <= T; ++k) {
    AlgElt acc = a[k] + b[k];
    for (int i = 1; i < k; ++i) {
      if (a[i].is_zero() || b[k - i].is_zero()) continue;
      acc += a[i] * b[k - i];
    }
    out[k] = std::move(acc);
  }
  return out;
}

// powers[p] = (1 + g)^p without the unit, for p = 1..max_power.
std::vector<Slots> unit_powers(const Slots& g, int T, int max_power) {
  std::vector<Slots> powers(max_power + 1);
  if (max_power >= 1) powers[1] = g;
  for (int p = 2; p <= max_power; ++p) powers[p] = unit_product(powers[p - 1], g, T);
  return powers;
}

Slots compose_slots(const Slots& a, const Slots& b, int T) {
  // gamma_k = b_k + sum_{m >= 1} a_m [(1 + b)^{m+1}]_{k-m}, where the slot-0
  // entry of every power is the formal unit. The powers accumulate the sum
  // over compositions J of k - m into m + 1 parts.
  const auto powers = unit_powers(b, T, T);
  Slots out(T + 1, AlgElt(a[0].algebra()));
  for (int k = 1; k <= T; ++k) {
    AlgElt acc = b[k];
    for (int m = 1; m <= k; ++m) {
      if (a[m].is_zero()) continue;
      if (m == k) {
        acc += a[m];
        continue;
      }
      const AlgElt& tail = powers[m + 1][k - m];
      if (!tail.is_zero()) acc += a[m] * tail;
    }
    out[k] = std::move(acc);
  }
  return out;
}

Slots star_slots(const Slots& a, const Slots& b, int T) {
  Slots out(T + 1, AlgElt(a[0].algebra()));
  for (int k = 1; k <= T; ++k) {
    AlgElt acc = a[k] + b[k];
    for (int m = 1; m < k; ++m) {
      if (a[m].is_zero() || b[k - m].is_zero()) continue;
      acc += (a[m] * b[k - m]) * Rational(m + 1);
    }
    out[k] = std::move(acc);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Series::Series(AlgebraPtr algebra, int truncation, bool graded_mode)
    : algebra_(std::move(algebra)), graded_mode_(graded_mode) {
  if (!algebra_) throw Error(ErrorCode::InvalidArgument, "series needs an algebra");
  if (truncation < 1) throw Error(ErrorCode::BadParams, "truncation must be >= 1");
  coeffs_.assign(truncation, AlgElt(algebra_));
}

Series Series::unit(AlgebraPtr algebra, int truncation, bool graded_mode) {
  return Series(std::move(algebra), truncation, graded_mode);
}

Series Series::from_coefficients(AlgebraPtr algebra, bool graded_mode,
                                 std::vector<AlgElt> coeffs) {
  Series s(std::move(algebra), static_cast<int>(coeffs.size()), graded_mode);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    s.set_coeff(static_cast<int>(k + 1), std::move(coeffs[k]));
  }
  return s;
}

const AlgElt& Series::coeff(int k) const {
  if (k < 1 || k > truncation()) throw Error(ErrorCode::BadIndex, "slot " + std::to_string(k) + " out of range");
  return coeffs_[k - 1];
}

void Series::set_coeff(int k, AlgElt value) {
  if (k < 1 || k > truncation()) throw Error(ErrorCode::BadIndex, "slot " + std::to_string(k) + " out of range");
  if (value.algebra() && value.algebra() != algebra_) {
    throw Error(ErrorCode::AlgebraMismatch, "coefficient from a different algebra");
  }
  if (graded_mode_ && algebra_->graded() && !value.is_homogeneous_of(k)) {
    throw Error(ErrorCode::GradingViolation,
                "slot " + std::to_string(k) + " coefficient " + value.to_string() +
                    " is not homogeneous of degree " + std::to_string(k));
  }
  if (!value.algebra()) value = AlgElt(algebra_) + value;
  coeffs_[k - 1] = std::move(value);
}

bool Series::is_unit() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool operator==(const Series& a, const Series& b) {
  return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------

Series compose(const Series& f, const Series& g) {
  check_compatible(f, g);
  const int T = f.truncation();
  return from_slots(f.algebra(), f.graded_mode() && g.graded_mode(),
                    compose_slots(slots_of(f), slots_of(g), T));
}

Series left_divide(const Series& f, const Series& h) {
  check_compatible(f, h);
  // The coefficient of b_k in gamma_k is 1 and every other contribution to
  // gamma_k involves only b_{<k}: forward substitution.
  const int T = f.truncation();
  const Slots a = slots_of(f);
  const Slots target = slots_of(h);
  Slots b(T + 1, AlgElt(f.algebra()));
  for (int k = 1; k <= T; ++k) {
    const Slots partial = compose_slots(a, b, k);
    b[k] = target[k] - partial[k];
  }
  return from_slots(f.algebra(), f.graded_mode() && h.graded_mode(), std::move(b));
}

Series right_divide(const Series& h, const Series& g) {
  check_compatible(h, g);
  const int T = h.truncation();
  const Slots b = slots_of(g);
  const Slots target = slots_of(h);
  Slots a(T + 1, AlgElt(h.algebra()));
  for (int k = 1; k <= T; ++k) {
    Slots b_k(b.begin(), b.begin() + k + 1);
    const Slots partial = compose_slots(a, b_k, k);
    a[k] = target[k] - partial[k];
  }
  return from_slots(h.algebra(), h.graded_mode() && g.graded_mode(), std::move(a));
}

Series star(const Series& f, const Series& g) {
  check_compatible(f, g);
  return from_slots(f.algebra(), f.graded_mode() && g.graded_mode(),
                    star_slots(slots_of(f), slots_of(g), f.truncation()));
}

Series star_left_divide(const Series& f, const Series& h) {
  check_compatible(f, h);
  const int T = f.truncation();
  const Slots a = slots_of(f);
  const Slots target = slots_of(h);
  Slots b(T + 1, AlgElt(f.algebra()));
  for (int k = 1; k <= T; ++k) {
    AlgElt rest = a[k];
    for (int m = 1; m < k; ++m) {
      if (a[m].is_zero() || b[k - m].is_zero()) continue;
      rest += (a[m] * b[k - m]) * Rational(m + 1);
    }
    b[k] = target[k] - rest;
  }
  return from_slots(f.algebra(), f.graded_mode() && h.graded_mode(), std::move(b));
}

Series star_right_divide(const Series& h, const Series& g) {
  check_compatible(h, g);
  const int T = h.truncation();
  const Slots b = slots_of(g);
  const Slots target = slots_of(h);
  Slots a(T + 1, AlgElt(h.algebra()));
  for (int k = 1; k <= T; ++k) {
    AlgElt rest = b[k];
    for (int m = 1; m < k; ++m) {
      if (a[m].is_zero() || b[k - m].is_zero()) continue;
      rest += (a[m] * b[k - m]) * Rational(m + 1);
    }
    a[k] = target[k] - rest;
  }
  return from_slots(h.algebra(), h.graded_mode() && g.graded_mode(), std::move(a));
}

Series bullet(const Series& a, const Series& b) {
  check_compatible(a, b);
  // b + sum_{m >= 1} a_m (1 + b)^{m+1}
  const int T = a.truncation();
  const Slots as = slots_of(a);
  const Slots bs = slots_of(b);
  const auto powers = unit_powers(bs, T, T);
  Slots out = bs;
  for (int m = 1; m <= T; ++m) {
    if (as[m].is_zero()) continue;
    out[m] += as[m];
    for (int j = 1; m + j <= T; ++j) {
      const AlgElt& p = powers[m + 1][j];
      if (!p.is_zero()) out[m + j] += as[m] * p;
    }
  }
  return from_slots(a.algebra(), a.graded_mode() && b.graded_mode(), std::move(out));
}

Series linearized_composition(const Series& a, const Series& b) {
  check_compatible(a, b);
  // Work over dual numbers: b's coefficients are tagged with eps, eps^2 = 0,
  // and only the eps-stratum of a o (1 + eps b) is kept.
  const int T = a.truncation();
  const AlgebraPtr& alg = a.algebra();
  struct Dual {
    Slots plain;  // eps^0 part without the formal unit
    Slots eps;    // eps^1 part
  };
  auto dual_product = [&](const Dual& x, const Dual& y) {
    Dual out{unit_product(x.plain, y.plain, T), Slots(T + 1, AlgElt(alg))};
    for (int k = 1; k <= T; ++k) {
      AlgElt acc = x.eps[k] + y.eps[k];
      for (int i = 1; i < k; ++i) {
        if (!x.plain[i].is_zero() && !y.eps[k - i].is_zero()) acc += x.plain[i] * y.eps[k - i];
        if (!x.eps[i].is_zero() && !y.plain[k - i].is_zero()) acc += x.eps[i] * y.plain[k - i];
      }
      out.eps[k] = std::move(acc);
    }
    return out;
  };
  const Dual tagged{Slots(T + 1, AlgElt(alg)), slots_of(b)};
  std::vector<Dual> powers(T + 2);
  powers[1] = tagged;
  for (int p = 2; p <= T + 1; ++p) powers[p] = dual_product(powers[p - 1], tagged);

  const Slots as = slots_of(a);
  Slots out(T + 1, AlgElt(alg));
  for (int k = 1; k <= T; ++k) {
    AlgElt acc = powers[1].eps[k];  // m = 0, a_0 = 1
    for (int m = 1; m < k; ++m) {
      if (as[m].is_zero()) continue;
      const AlgElt& e = powers[m + 1].eps[k - m];
      if (!e.is_zero()) acc += as[m] * e;
    }
    out[k] = std::move(acc);
  }
  return from_slots(alg, a.graded_mode() && b.graded_mode(), std::move(out));
}

Depth depth(const Series& w) {
  for (int k = 1; k <= w.truncation(); ++k) {
    if (!w.coeff(k).is_zero()) return Depth{k};
  }
  return Depth{};
}

std::set<std::string> support(const Series& w) {
  if (!w.algebra()->is_free()) {
    throw Error(ErrorCode::SupportNeedsFreeAlgebra, "support is defined over free algebras only");
  }
  std::set<std::string> out;
  for (int k = 1; k <= w.truncation(); ++k) {
    for (const auto& [word, c] : w.coeff(k).terms()) {
      for (Letter l : word) out.insert(w.algebra()->labels()[l]);
    }
  }
  return out;
}

Series difference(const Series& x, const Series& y) {
  check_compatible(x, y);
  Series out(x.algebra(), x.truncation(), x.graded_mode() && y.graded_mode());
  for (int k = 1; k <= x.truncation(); ++k) out.set_coeff(k, x.coeff(k) - y.coeff(k));
  return out;
}

Series associator_defect(const Series& a, const Series& b, const Series& c) {
  return difference(compose(compose(a, b), c), compose(a, compose(b, c)));
}

}  // namespace fpsloop
