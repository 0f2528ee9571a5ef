#include "fpsloop/loop_calculus.hpp"

#include <algorithm>
#include <sstream>

#include "fpsloop/error.hpp"
#include "fpsloop/random.hpp"

namespace fpsloop {

Series loop_commutator(const Series& a, const Series& b) {
  return left_divide(compose(b, a), compose(a, b));
}

Series loop_associator(const Series& a, const Series& b, const Series& c) {
  return left_divide(compose(a, compose(b, c)), compose(compose(a, b), c));
}

// ---------------------------------------------------------------------------

namespace {

int base_arity(DeviationBase base) { return base == DeviationBase::Commutator ? 2 : 3; }

Series evaluate(DeviationBase base, const std::vector<int>& indices, std::size_t level,
                const std::vector<Series>& args) {
  if (level == 0) {
    return base == DeviationBase::Commutator ? loop_commutator(args[0], args[1])
                                             : loop_associator(args[0], args[1], args[2]);
  }
  const std::size_t slot = static_cast<std::size_t>(indices[level - 1]) - 1;
  auto with = [&](const Series& value) {
    std::vector<Series> reduced;
    reduced.reserve(args.size() - 1);
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (k == slot) {
        reduced.push_back(value);
      } else if (k != slot + 1) {
        reduced.push_back(args[k]);
      }
    }
    return evaluate(base, indices, level - 1, reduced);
  };
  const Series& y = args[slot];
  const Series& z = args[slot + 1];
  return left_divide(compose(with(y), with(z)), with(compose(y, z)));
}

}  // namespace

int DeviationExpr::arity() const {
  return base_arity(base) + static_cast<int>(indices.size());
}

void DeviationExpr::validate() const {
  for (std::size_t j = 0; j < indices.size(); ++j) {
    const int bound = base_arity(base) + static_cast<int>(j);
    if (indices[j] < 1 || indices[j] > bound) {
      throw Error(ErrorCode::BadIndex, "deviation index " + std::to_string(indices[j]) +
                                           " at step " + std::to_string(j + 1) +
                                           " must lie in 1.." + std::to_string(bound));
    }
  }
}

std::string DeviationExpr::to_string() const {
  std::ostringstream out;
  out << (base == DeviationBase::Commutator ? "comm" : "assoc");
  if (!indices.empty()) {
    out << "_";
    for (std::size_t j = 0; j < indices.size(); ++j) out << (j ? "," : "") << indices[j];
  }
  return out.str();
}

Series deviation_apply(const DeviationExpr& expr, const std::vector<Series>& args) {
  expr.validate();
  if (static_cast<int>(args.size()) != expr.arity()) {
    throw Error(ErrorCode::BadArity, expr.to_string() + " takes " + std::to_string(expr.arity()) +
                                         " arguments, got " + std::to_string(args.size()));
  }
  return evaluate(expr.base, expr.indices, expr.indices.size(), args);
}

DeviationExpr p_nm_expr(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::BadArity, "P_{n,m} needs n, m >= 1");
  DeviationExpr expr{DeviationBase::Associator, {}};
  expr.indices.insert(expr.indices.end(), n - 1, 1);
  expr.indices.insert(expr.indices.end(), m - 1, n + 1);
  return expr;
}

Series p_nm(const std::vector<Series>& xs, const std::vector<Series>& ys, const Series& z) {
  const DeviationExpr expr =
      p_nm_expr(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
  std::vector<Series> args(xs);
  args.insert(args.end(), ys.begin(), ys.end());
  args.push_back(z);
  return deviation_apply(expr, args);
}

AlgElt multilinear_stratum(const AlgElt& x, const std::vector<Letter>& letters) {
  AlgElt out(x.algebra());
  std::vector<Letter> wanted(letters);
  std::sort(wanted.begin(), wanted.end());
  for (const auto& [word, c] : x.terms()) {
    Word sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() == wanted.size() && std::equal(sorted.begin(), sorted.end(), wanted.begin())) {
      out.add_term(word, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

FiltrationBracket filtration_bracket(const std::vector<int>& degrees, int deg_y, int deg_z,
                                     int truncation) {
  if (deg_y < 1 || deg_z < 1 ||
      std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 1; })) {
    throw Error(ErrorCode::BadParams, "filtration bracket degrees must be >= 1");
  }
  int total = deg_y + deg_z;
  for (int d : degrees) total += d;
  if (truncation < total) {
    throw Error(ErrorCode::TruncationTooSmall, "truncation " + std::to_string(truncation) +
                                                   " below total degree " + std::to_string(total));
  }

  std::vector<Generator> gens;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    gens.push_back({"alpha" + std::to_string(i + 1), degrees[i]});
  }
  gens.push_back({"beta", deg_y});
  gens.push_back({"gamma", deg_z});
  FreeTruncatedOptions options;
  options.multilinear = true;
  options.name = "filtration";
  AlgebraPtr algebra = Algebra::free_truncated(gens, total, options);

  auto tagged = [&](std::size_t g) {
    Series s(algebra, truncation, true);
    s.set_coeff(gens[g].degree, AlgElt::monomial(algebra, Word(1, static_cast<Letter>(g))));
    return s;
  };
  std::vector<Series> xs;
  FiltrationBracket out{algebra, {}, {}, {}, {}};
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    xs.push_back(tagged(i));
    out.xs.push_back(make_graded(degrees[i], AlgElt::symbol(algebra, gens[i].name)));
  }
  const std::size_t iy = degrees.size();
  const Series y = tagged(iy);
  const Series z = tagged(iy + 1);
  out.y = make_graded(deg_y, AlgElt::symbol(algebra, "beta"));
  out.z = make_graded(deg_z, AlgElt::symbol(algebra, "gamma"));

  AlgElt raw(algebra);
  if (xs.empty()) {
    raw = loop_commutator(z, y).coeff(total);
  } else {
    raw = p_nm(xs, {z}, y).coeff(total) - p_nm(xs, {y}, z).coeff(total);
  }
  std::vector<Letter> letters;
  for (std::size_t g = 0; g < gens.size(); ++g) letters.push_back(static_cast<Letter>(g));
  out.value = GradedElt{total, multilinear_stratum(raw, letters)};
  return out;
}

NSequenceReport n_sequence_check(const DeviationExpr& expr, const std::vector<int>& depths,
                                 const AlgebraPtr& algebra, int truncation, int samples,
                                 std::uint64_t seed) {
  expr.validate();
  if (static_cast<int>(depths.size()) != expr.arity()) {
    throw Error(ErrorCode::BadArity, "depth list does not match the word's arity");
  }
  Rng rng(seed);
  NSequenceReport report;
  int want = 0;
  for (int d : depths) want += d;
  for (int s = 0; s < samples; ++s) {
    std::vector<Series> args;
    for (int d : depths) args.push_back(random_series(algebra, truncation, true, rng, d));
    const Depth got = depth(deviation_apply(expr, args));
    ++report.samples;
    if (got.infinite()) continue;
    const int slack = *got.value - want;
    if (!report.min_slack || slack < *report.min_slack) report.min_slack = slack;
    if (slack < 0) {
      ++report.failures;
      report.pass = false;
      if (report.first_failure.empty()) {
        report.first_failure = "sample " + std::to_string(s) + " has depth " +
                               std::to_string(*got.value) + " < " + std::to_string(want);
      }
    }
  }
  return report;
}

AbsorptionWitness absorption_witness(const AlgElt& alpha, const AlgElt& beta, int n, int i,
                                     int truncation) {
  if (n < 1 || i < 1) throw Error(ErrorCode::BadParams, "n and i must be >= 1");
  if (truncation < std::max(n + 2, n + i)) {
    throw Error(ErrorCode::TruncationTooSmall, "absorption witness needs T >= max(n + 2, n + i)");
  }
  AlgebraPtr algebra = alpha.algebra() ? alpha.algebra() : beta.algebra();
  if (!algebra) throw Error(ErrorCode::InvalidArgument, "alpha and beta are both unbound zeros");
  Series b(algebra, truncation, false);
  b.set_coeff(i, beta);
  Series a(algebra, truncation, false);
  a.set_coeff(n, alpha);
  Series comm = loop_commutator(b, a);
  AlgElt coefficient = comm.coeff(n + i);
  return AbsorptionWitness{std::move(comm), std::move(coefficient)};
}

KlopschSolution klopsch_witness(int n, int m, KlopschTarget target) {
  if (n < 1 || m < n + 2) throw Error(ErrorCode::BadParams, "klopsch witness needs n >= 1, m >= n + 2");
  // Slot-m coefficient of [a, A] o [b, B]:
  //   ((m-n+1) lambda + (m-n) mu) beta*alpha - ((n+1) lambda + (n+2) mu) alpha*beta
  // Solve p lambda + q mu = u, r lambda + s mu = v.
  const Rational p = m - n + 1, q = m - n, r = -(n + 1), s = -(n + 2);
  const Rational u = target == KlopschTarget::BA ? 1 : 0;
  const Rational v = target == KlopschTarget::AB ? 1 : 0;
  const Rational det = p * s - q * r;  // -(m + 2)
  return KlopschSolution{(u * s - q * v) / det, (p * v - r * u) / det};
}

AlgElt klopsch_verify(int n, int m, const Rational& lambda, const Rational& mu) {
  if (n < 1 || m < n + 2) throw Error(ErrorCode::BadParams, "klopsch witness needs n >= 1, m >= n + 2");
  AlgebraPtr algebra = builtin::free_algebra({"alpha", "beta"}, m + 1);
  const AlgElt alpha = AlgElt::symbol(algebra, "alpha");
  const AlgElt beta = AlgElt::symbol(algebra, "beta");
  const int T = m + 1;
  auto single = [&](int slot, const AlgElt& c) {
    Series s(algebra, T, false);
    s.set_coeff(slot, c);
    return s;
  };
  const Series a = single(m - n, beta * lambda);
  const Series b = single(m - n - 1, beta * mu);
  const Series A = single(n, alpha);
  const Series B = single(n + 1, alpha);
  return compose(loop_commutator(a, A), loop_commutator(b, B)).coeff(m);
}

}  // namespace fpsloop
