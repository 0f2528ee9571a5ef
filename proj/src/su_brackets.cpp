#include "fpsloop/su_brackets.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fpsloop/error.hpp"

namespace fpsloop {

namespace {

using Mask = unsigned;
// nullopt stands for the formal unit of degree 0.
using MaybeUnit = std::optional<GradedElt>;

MaybeUnit unit_star(const MaybeUnit& x, const MaybeUnit& y) {
  if (!x) return y;
  if (!y) return x;
  return star_graded(*x, *y);
}

GradedElt zero_of_degree(int degree, const AlgebraPtr& algebra) {
  return GradedElt{degree, AlgElt(algebra)};
}

int total_degree(const std::vector<GradedElt>& xs) {
  int d = 0;
  for (const auto& x : xs) d += x.degree;
  return d;
}

const AlgebraPtr& common_algebra(const std::vector<GradedElt>& xs, const GradedElt& z) {
  for (const auto& x : xs) {
    if (x.value.algebra() && z.value.algebra() && x.value.algebra() != z.value.algebra()) {
      throw Error(ErrorCode::AlgebraMismatch, "graded elements over different algebras");
    }
  }
  return z.value.algebra();
}

class PSolver {
 public:
  PSolver(const std::vector<GradedElt>& xs, const std::vector<GradedElt>& ys, const GradedElt& z)
      : xs_(xs), ys_(ys), z_(z), algebra_(z.value.algebra()) {}

  GradedElt p(Mask mi, Mask mj) {
    if (mi == 0 || mj == 0) return zero_of_degree(degree_of(mi, mj), algebra_);
    auto key = std::make_pair(mi, mj);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const MaybeUnit ai = fold(xs_, mi);
    const MaybeUnit aj = fold(ys_, mj);
    const GradedElt left = *unit_star(unit_star(ai, aj), z_);
    const GradedElt right = *unit_star(ai, unit_star(aj, z_));
    GradedElt out{left.degree, left.value - right.value};

    // Subtract every term whose p-factor is a proper nonempty sub-pair.
    for (Mask i2 = mi; i2 != 0; i2 = (i2 - 1) & mi) {
      for (Mask j2 = mj; j2 != 0; j2 = (j2 - 1) & mj) {
        if (i2 == mi && j2 == mj) continue;
        const MaybeUnit prefix = unit_star(fold(xs_, mi ^ i2), fold(ys_, mj ^ j2));
        const GradedElt sub = p(i2, j2);
        if (sub.value.is_zero()) continue;
        out.value -= unit_star(prefix, sub)->value;
      }
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  MaybeUnit fold(const std::vector<GradedElt>& list, Mask mask) const {
    MaybeUnit acc;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (mask & (1u << i)) acc = unit_star(acc, list[i]);
    }
    return acc;
  }

  int degree_of(Mask mi, Mask mj) const {
    int d = z_.degree;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
      if (mi & (1u << i)) d += xs_[i].degree;
    }
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (mj & (1u << j)) d += ys_[j].degree;
    }
    return d;
  }

  const std::vector<GradedElt>& xs_;
  const std::vector<GradedElt>& ys_;
  const GradedElt& z_;
  AlgebraPtr algebra_;
  std::map<std::pair<Mask, Mask>, GradedElt> memo_;
};

constexpr std::size_t kMaxArgs = 16;

}  // namespace

GradedElt make_graded(int degree, AlgElt value) {
  if (value.algebra() && value.algebra()->graded() && !value.is_zero() &&
      !value.is_homogeneous_of(degree)) {
    throw Error(ErrorCode::GradingViolation,
                value.to_string() + " is not homogeneous of degree " + std::to_string(degree));
  }
  return GradedElt{degree, std::move(value)};
}

std::vector<Deconcatenation> deconcatenations(std::size_t length, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::BadParams, "deconcatenations need k >= 1");
  if (k > length) {
    throw Error(ErrorCode::KTooLarge, "k = " + std::to_string(k) + " exceeds length " +
                                          std::to_string(length));
  }
  std::vector<Deconcatenation> out;
  std::vector<std::size_t> assign(length, 0);
  // Odometer over all maps positions -> blocks, keeping the surjective ones.
  while (true) {
    std::vector<bool> hit(k, false);
    for (auto b : assign) hit[b] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
      Deconcatenation d(k);
      for (std::size_t pos = 0; pos < length; ++pos) d[assign[pos]].push_back(pos);
      out.push_back(std::move(d));
    }
    std::size_t pos = 0;
    while (pos < length && ++assign[pos] == k) assign[pos++] = 0;
    if (pos == length) break;
  }
  return out;
}

Rational n_coefficient(const std::vector<int>& degrees) {
  Rational acc = 1;
  long partial = 0;
  for (int d : degrees) {
    partial += d;
    acc *= Rational(partial + 1);
  }
  return acc;
}

GradedElt star_graded(const GradedElt& x, const GradedElt& y) {
  return GradedElt{x.degree + y.degree, (x.value * y.value) * Rational(x.degree + 1)};
}

GradedElt left_normed_star(const std::vector<GradedElt>& xs) {
  if (xs.empty()) throw Error(ErrorCode::EmptyArgs, "left-normed star of an empty list");
  GradedElt acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = star_graded(acc, xs[i]);
  return acc;
}

GradedElt su_p(const std::vector<GradedElt>& xs, const std::vector<GradedElt>& ys,
               const GradedElt& z) {
  if (xs.empty() && ys.empty()) throw Error(ErrorCode::EmptyArgs, "p needs at least one argument");
  if (xs.size() > kMaxArgs || ys.size() > kMaxArgs) {
    throw Error(ErrorCode::BadArity, "too many p arguments");
  }
  common_algebra(xs, z);
  common_algebra(ys, z);
  PSolver solver(xs, ys, z);
  return solver.p((1u << xs.size()) - 1, (1u << ys.size()) - 1);
}

GradedElt sabinin_binary(const GradedElt& a, const GradedElt& b) {
  GradedElt ba = star_graded(b, a);
  return GradedElt{ba.degree, ba.value - star_graded(a, b).value};
}

GradedElt sabinin_closed(const std::vector<GradedElt>& xs, const GradedElt& b,
                         const GradedElt& c) {
  if (xs.empty()) {
    throw Error(ErrorCode::EmptyI, "closed form needs l(I) >= 1; use the binary bracket");
  }
  const AlgebraPtr& algebra = common_algebra(xs, b);
  common_algebra(xs, c);
  const AlgElt cb = commutator(c.value, b.value);
  GradedElt out = zero_of_degree(total_degree(xs) + b.degree + c.degree, algebra);
  if (cb.is_zero()) return out;

  for (std::size_t k = 1; k <= xs.size(); ++k) {
    const Rational sign = (k % 2 == 1) ? Rational(1) : Rational(-1);
    for (const auto& blocks : deconcatenations(xs.size(), k)) {
      Rational coeff = sign;
      std::optional<AlgElt> word;
      for (const auto& block : blocks) {
        std::vector<int> degs;
        for (auto pos : block) {
          degs.push_back(xs[pos].degree);
          word = word ? *word * xs[pos].value : xs[pos].value;
        }
        coeff *= n_coefficient(degs);
      }
      coeff *= Rational(std::accumulate(blocks.back().begin(), blocks.back().end(), 0,
                                        [&](int acc, std::size_t pos) {
                                          return acc + xs[pos].degree;
                                        }));
      if (coeff == 0) continue;
      out.value += (*word * cb) * coeff;
    }
  }
  return out;
}

GradedElt sabinin_recursive(const std::vector<GradedElt>& xs, const GradedElt& b,
                            const GradedElt& c) {
  GradedElt first = su_p(xs, {c}, b);
  return GradedElt{first.degree, first.value - su_p(xs, {b}, c).value};
}

GradedElt multioperator_phi(const std::vector<GradedElt>& xs,
                            const std::vector<GradedElt>& ys) {
  if (xs.empty() || ys.size() < 2) {
    throw Error(ErrorCode::BadArity, "phi needs m >= 1 and n + 1 >= 2 arguments");
  }
  if (xs.size() > 8 || ys.size() > 8) throw Error(ErrorCode::BadArity, "phi arity capped at 8");
  std::vector<std::size_t> sigma(xs.size()), tau(ys.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::iota(tau.begin(), tau.end(), 0);
  GradedElt out = zero_of_degree(total_degree(xs) + total_degree(ys), ys.back().value.algebra());
  Rational count = 0;
  do {
    std::vector<GradedElt> xp;
    for (auto i : sigma) xp.push_back(xs[i]);
    std::iota(tau.begin(), tau.end(), 0);
    do {
      std::vector<GradedElt> yp;
      for (std::size_t j = 0; j + 1 < tau.size(); ++j) yp.push_back(ys[tau[j]]);
      out.value += su_p(xp, yp, ys[tau.back()]).value;
      count += 1;
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  out.value *= Rational(1) / count;
  return out;
}

}  // namespace fpsloop
