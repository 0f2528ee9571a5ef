#include "fpsloop/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "fpsloop/error.hpp"
#include "fpsloop/lie_identities.hpp"
#include "fpsloop/loop_calculus.hpp"
#include "fpsloop/random.hpp"
#include "fpsloop/su_brackets.hpp"

namespace fpsloop {

// --- check_group --------------------------------------------------------------

GroupReport check_group(const AlgebraPtr& algebra, int truncation, int samples,
                        std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::BadParams, "need at least one sample");
  GroupReport report;
  report.seed = seed;
  report.predicate = check_s_comm_ideal(algebra);
  Rng rng(seed);
  const bool graded = algebra->graded();
  for (int s = 0; s < samples; ++s) {
    Series a = random_series(algebra, truncation, graded, rng);
    Series b = random_series(algebra, truncation, graded, rng);
    Series c = random_series(algebra, truncation, graded, rng);
    Series defect = associator_defect(a, b, c);
    ++report.samples;
    if (defect.is_unit()) continue;
    if (report.nonassociative++ == 0) {
      report.witness = {print_series(a), print_series(b), print_series(c)};
      report.defect = print_series(defect);
    }
  }
  const bool sampled_group = report.nonassociative == 0;
  if (sampled_group != report.predicate.s_brackets_zero) {
    throw Error(ErrorCode::Inconsistent,
                "basis predicate S[S,S] = 0 is " +
                    std::string(report.predicate.s_brackets_zero ? "true" : "false") +
                    " but sampling found " + std::to_string(report.nonassociative) +
                    " nonassociative triples out of " + std::to_string(samples));
  }
  report.verdict = sampled_group ? GroupVerdict::Group : GroupVerdict::NotGroup;
  return report;
}

json report_to_json(const GroupReport& report) {
  json doc{{"verdict", report.verdict_name()},
           {"s_brackets_zero", report.predicate.s_brackets_zero},
           {"brackets_s3_zero", report.predicate.brackets_s3_zero},
           {"samples", report.samples},
           {"nonassociative", report.nonassociative},
           {"seed", report.seed}};
  if (!report.witness.empty()) {
    doc["witness"] = report.witness;
    doc["defect"] = report.defect;
  }
  return doc;
}

// --- acceptance suite -----------------------------------------------------------

namespace {

// Collects the first failure of a criterion.
struct Check {
  bool ok = true;
  long long count = 0;
  std::string first;

  void require(bool condition, const std::function<std::string()>& message) {
    ++count;
    if (condition || !ok) {
      if (!condition) ok = false;
      return;
    }
    ok = false;
    first = message();
  }

  std::string detail(const std::string& summary) const {
    return ok ? summary : "first failure: " + first;
  }
};

struct Context {
  const AcceptanceOptions& options;

  GradedElt closed(const std::vector<GradedElt>& xs, const GradedElt& b,
                   const GradedElt& c) const {
    GradedElt g = sabinin_closed(xs, b, c);
    if (options.flip_closed_sign) g.value = -g.value;
    return g;
  }
};

AlgElt sym(const AlgebraPtr& a, const char* label) { return AlgElt::symbol(a, label); }

Series single(const AlgebraPtr& algebra, int T, bool graded, int slot, const AlgElt& c) {
  Series s(algebra, T, graded);
  if (slot <= T) s.set_coeff(slot, c);
  return s;
}

// 1 --------------------------------------------------------------------------
std::pair<bool, std::string> criterion_1(const Context&) {
  auto F = builtin::free_algebra({"a", "b", "g"}, 3);
  const AlgElt a = sym(F, "a"), b = sym(F, "b"), g = sym(F, "g");
  const Series A = single(F, 3, true, 1, a), B = single(F, 3, true, 1, b),
               C = single(F, 3, true, 1, g);
  const AlgElt left = compose(compose(A, B), C).coeff(3);
  const AlgElt right = compose(A, compose(B, C)).coeff(3);
  const AlgElt base = a * g * g + a * b * b + b * g * g;
  const AlgElt want_left = base + a * b * g * Rational(6);
  const AlgElt want_right = base + a * b * g * Rational(5) + a * g * b;
  const AlgElt want_diff = a * commutator(b, g);
  const Series assoc = loop_associator(A, B, C);

  Check check;
  check.require(left == want_left, [&] { return "((1+a)o(1+b))o(1+g) degree 3 = " + left.to_string(); });
  check.require(right == want_right, [&] { return "(1+a)o((1+b)o(1+g)) degree 3 = " + right.to_string(); });
  check.require(associator_defect(A, B, C).coeff(3) == want_diff,
                [&] { return "difference = " + associator_defect(A, B, C).coeff(3).to_string(); });
  check.require(assoc.coeff(1).is_zero() && assoc.coeff(2).is_zero() && assoc.coeff(3) == want_diff,
                [&] { return "loop associator = " + print_series(assoc); });
  return {check.ok, check.detail("degree 3: " + left.to_string() + " vs " + right.to_string() +
                                 "; difference " + want_diff.to_string())};
}

// 2 --------------------------------------------------------------------------
std::pair<bool, std::string> criterion_2(const Context& ctx) {
  auto U = builtin::upper_triangular(3);
  const int T = 4;
  Check check;
  for (const Word& wa : U->basis()) {
    for (const Word& wb : U->basis()) {
      const AlgElt a = AlgElt::monomial(U, wa), b = AlgElt::monomial(U, wb);
      const int da = *U->word_degree(wa), db = *U->word_degree(wb);
      Series want(U, T, true);
      want.set_coeff(da, want.coeff(da) + a);
      want.set_coeff(db, want.coeff(db) + b);
      if (da + db <= T) want.set_coeff(da + db, want.coeff(da + db) + a * b * Rational(2));
      const Series got = compose(single(U, T, true, da, a), single(U, T, true, db, b));
      check.require(got == want, [&] {
        return "(1+" + a.to_string() + ")o(1+" + b.to_string() + ") = " + print_series(got);
      });
    }
  }
  Rng rng(ctx.options.seed);
  for (int s = 0; s < 200; ++s) {
    Series x = random_series(U, T, true, rng), y = random_series(U, T, true, rng),
           z = random_series(U, T, true, rng);
    Series assoc = loop_associator(x, y, z);
    check.require(assoc.is_unit(), [&] { return "associator " + print_series(assoc); });
  }
  return {check.ok, check.detail("9 basis products and 200 associators")};
}

// 3 --------------------------------------------------------------------------
std::pair<bool, std::string> criterion_3(const Context& ctx) {
  const std::vector<std::string> names{"ut:3", "split_null:2", "split_null:3", "ev",
                                       "scalar", "laurent:-4:4", "free:a,b:3", "free:a,b,c:3"};
  Check check;
  std::string summary;
  for (const auto& name : names) {
    try {
      GroupReport r = check_group(builtin::from_spec(name), 5, 200, ctx.options.seed);
      summary += (summary.empty() ? "" : ", ") + name + "=" + r.verdict_name();
      check.require(r.samples >= 200, [&] { return name + " sampled too few triples"; });
    } catch (const Error& e) {
      check.require(false, [&] { return name + ": " + e.what(); });
    }
  }
  return {check.ok, check.detail(summary)};
}

// 4 --------------------------------------------------------------------------
std::pair<bool, std::string> criterion_4(const Context& ctx) {
  const int T = 6;
  Rng rng(ctx.options.seed + 4);
  Check check;
  const std::vector<std::pair<AlgebraPtr, bool>> setups{
      {builtin::free_algebra({"a", "b"}, T), true}, {builtin::split_null(2), false}};
  for (const auto& [algebra, graded] : setups) {
    for (int s = 0; s < 100; ++s) {
      const Series a = random_series(algebra, T, graded, rng);
      const Series b = random_series(algebra, T, graded, rng);
      const Series lin = linearized_composition(a, b);
      for (int k = 1; k <= T; ++k) {
        // sum_{m >= 0} (m+1) a_m b_{k-m} with a_0 = 1
        AlgElt want = b.coeff(k);
        for (int m = 1; m < k; ++m) want += a.coeff(m) * b.coeff(k - m) * Rational(m + 1);
        check.require(lin.coeff(k) == want, [&] {
          return algebra->name() + " slot " + std::to_string(k) + ": " + lin.coeff(k).to_string() +
                 " != " + want.to_string();
        });
      }
    }
  }
  return {check.ok, check.detail("100 pairs each over free:a,b:6 (graded) and split_null:2")};
}

// 5 --------------------------------------------------------------------------
std::pair<bool, std::string> criterion_5(const Context& ctx) {
  Check check;
  int cases = 0;
  std::vector<std::vector<int>> tuples{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples) {
      if (static_cast<int>(t.size()) != len - 1) continue;
      for (int d = 1; d <= 3; ++d) {
        auto u = t;
        u.push_back(d);
        next.push_back(u);
      }
    }
    for (const auto& I : next) {
      tuples.push_back(I);
      for (int db = 1; db <= 3; ++db) {
        for (int dc = 1; dc <= 3; ++dc) {
          std::vector<Generator> gens;
          int total = db + dc;
          for (std::size_t i = 0; i < I.size(); ++i) {
            gens.push_back({"a" + std::to_string(i + 1), I[i]});
            total += I[i];
          }
          gens.push_back({"b", db});
          gens.push_back({"c", dc});
          auto F = Algebra::free_truncated(gens, total);
          std::vector<GradedElt> xs;
          for (std::size_t i = 0; i < I.size(); ++i) xs.push_back(make_graded(I[i], sym(F, gens[i].name.c_str())));
          const GradedElt b = make_graded(db, sym(F, "b")), c = make_graded(dc, sym(F, "c"));
          const GradedElt rec = sabinin_recursive(xs, b, c);
          const GradedElt clo = ctx.closed(xs, b, c);
          ++cases;
          check.require(rec == clo, [&] {
            std::string idx;
            for (int d : I) idx += std::to_string(d) + " ";
            return "I = (" + idx + ") |b|=" + std::to_string(db) + " |c|=" + std::to_string(dc) +
                   ": recursion " + rec.value.to_string() + " vs closed " + clo.value.to_string();
          });
        }
      }
    }
  }
  return {check.ok, check.detail(std::to_string(cases) + " index/degree combinations")};
}

// 6 --------------------------------------------------------------------------
std::pair<bool, std::string> criterion_6(const Context& ctx) {
  Check check;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int db = 1; db <= 2; ++db) {
        for (int dc = 1; dc <= 2; ++dc) {
          auto F = Algebra::free_truncated({{"ai", i}, {"aj", j}, {"b", db}, {"c", dc}},
                                           i + j + db + dc);
          const AlgElt ai = sym(F, "ai"), aj = sym(F, "aj"), b = sym(F, "b"), c = sym(F, "c");
          const GradedElt gi{i, ai}, gj{j, aj}, gb{db, b}, gc{dc, c};
          const AlgElt cb = commutator(c, b);
          // <a, b> = (|b|+1) ba - (|a|+1) ab
          const AlgElt bin_want = b * ai * Rational(db + 1) - ai * b * Rational(i + 1);
          check.require(sabinin_binary(gi, gb).value == bin_want,
                        [&] { return "<a_" + std::to_string(i) + ", b> = " + sabinin_binary(gi, gb).value.to_string(); });
          // <a_i; b, c> = i(i+1) a_i [c, b]
          const AlgElt one_want = ai * cb * Rational(i * (i + 1));
          for (const auto& got : {ctx.closed({gi}, gb, gc), sabinin_recursive({gi}, gb, gc)}) {
            check.require(got.value == one_want, [&] {
              return "<a_" + std::to_string(i) + "; b, c> = " + got.value.to_string();
            });
          }
          // <a_i, a_j; b, c> = i(i+1)(i+2j+1) a_i a_j [c,b] - i(i+1)(j+1) a_j a_i [c,b]
          const AlgElt two_want = ai * aj * cb * Rational(i * (i + 1) * (i + 2 * j + 1)) -
                                  aj * ai * cb * Rational(i * (i + 1) * (j + 1));
          for (const auto& got : {ctx.closed({gi, gj}, gb, gc), sabinin_recursive({gi, gj}, gb, gc)}) {
            check.require(got.value == two_want, [&] {
              return "<a_" + std::to_string(i) + ", a_" + std::to_string(j) + "; b, c> = " +
                     got.value.to_string();
            });
          }
        }
      }
    }
  }
  return {check.ok, check.detail("binary, one- and two-argument displays for degrees 1..3")};
}

// 7 --------------------------------------------------------------------------
std::pair<bool, std::string> criterion_7(const Context& ctx) {
  const int lo = -4, hi = 4;
  auto L = builtin::laurent_window(lo, hi);
  auto t = [&](int i) { return GradedElt{i, sym(L, builtin::laurent_label(i).c_str())}; };
  Check check;
  int table = 0, vanishing = 0;
  for (int i = lo; i <= hi; ++i) {
    for (int j = lo; j <= hi; ++j) {
      if (i + j < lo || i + j > hi) continue;
      ++table;
      const AlgElt got = sabinin_binary(t(i), t(j)).value;
      const AlgElt want = t(i + j).value * Rational(j - i);
      check.require(got == want, [&] {
        return "<t^" + std::to_string(i) + ", t^" + std::to_string(j) + "> = " + got.to_string();
      });
    }
  }
  auto inside = [&](const std::vector<int>& degs) {
    for (unsigned mask = 1; mask < (1u << degs.size()); ++mask) {
      int s = 0;
      for (std::size_t k = 0; k < degs.size(); ++k) {
        if (mask >> k & 1u) s += degs[k];
      }
      if (s < lo || s > hi) return false;
    }
    return true;
  };
  for (int arity = 1; arity <= 2; ++arity) {
    std::vector<int> idx(arity + 2, lo);
    while (true) {
      if (inside(idx)) {
        std::vector<GradedElt> xs;
        for (int k = 0; k < arity; ++k) xs.push_back(t(idx[k]));
        const GradedElt b = t(idx[arity]), c = t(idx[arity + 1]);
        ++vanishing;
        const GradedElt clo = ctx.closed(xs, b, c);
        const GradedElt rec = sabinin_recursive(xs, b, c);
        check.require(clo.value.is_zero() && rec.value.is_zero(), [&] {
          return "arity " + std::to_string(arity) + " bracket nonzero: " + clo.value.to_string() +
                 " / " + rec.value.to_string();
        });
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] > hi) idx[pos++] = lo;
      if (pos == idx.size()) break;
    }
  }
  return {check.ok, check.detail(std::to_string(table) + " table entries, " +
                                 std::to_string(vanishing) + " vanishing brackets")};
}

// 8 --------------------------------------------------------------------------
std::pair<bool, std::string> criterion_8(const Context& ctx) {
  Check check;
  Rng rng(ctx.options.seed + 8);
  for (int n = 2; n <= 3; ++n) {
    auto R = builtin::split_null(n);
    const AlgElt e = sym(R, "e1");
    const std::vector<Word> basis = R->basis();
    for (int m = 1; m <= n + 1; ++m) {
      std::vector<GradedElt> xs{GradedElt{-2, e}};
      for (int k = 1; k < m; ++k) xs.push_back(GradedElt{-1, e});
      AlgElt em = e;
      for (int k = 1; k < m; ++k) em = em * e;
      Rational factorial = 1;
      for (int k = 2; k <= m + 1; ++k) factorial *= k;
      const Rational scale = (m % 2 == 1 ? 1 : -1) * factorial;
      bool some_nonzero = false;
      for (const Word& wx : basis) {
        for (const Word& wy : basis) {
          const GradedElt x{0, AlgElt::monomial(R, wx)}, y{0, AlgElt::monomial(R, wy)};
          const GradedElt got = ctx.closed(xs, x, y);
          const AlgElt want = m < n ? em * commutator(y.value, x.value) * scale : AlgElt(R);
          some_nonzero = some_nonzero || !got.value.is_zero();
          check.require(got.value == want && got.degree == -m - 1, [&] {
            return "split_null:" + std::to_string(n) + " m=" + std::to_string(m) + " x=" +
                   x.value.to_string() + " y=" + y.value.to_string() + ": " + got.value.to_string() +
                   " expected " + want.to_string();
          });
        }
      }
      if (m < n) {
        check.require(some_nonzero, [&] { return "e-family bracket vanished for m=" + std::to_string(m); });
      }
    }
    // Arity n: every basis tuple vanishes; arity n + 1: sampled tuples.
    auto tuple_bracket = [&](const std::vector<std::size_t>& idx) {
      std::vector<GradedElt> xs;
      for (std::size_t k = 0; k + 2 < idx.size(); ++k) {
        xs.push_back(GradedElt{-static_cast<int>(k % n) - 1, AlgElt::monomial(R, basis[idx[k]])});
      }
      return ctx.closed(xs, GradedElt{0, AlgElt::monomial(R, basis[idx[idx.size() - 2]])},
                        GradedElt{0, AlgElt::monomial(R, basis[idx.back()])});
    };
    std::vector<std::size_t> idx(n + 2, 0);
    while (true) {
      const GradedElt got = tuple_bracket(idx);
      check.require(got.value.is_zero(), [&] { return "arity-n bracket nonzero: " + got.value.to_string(); });
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == basis.size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int s = 0; s < 300; ++s) {
      std::vector<std::size_t> r(n + 3);
      for (auto& v : r) v = pick(rng);
      const GradedElt got = tuple_bracket(r);
      check.require(got.value.is_zero(), [&] { return "arity-(n+1) bracket nonzero: " + got.value.to_string(); });
    }
    // <x0, <x0, ..., <x0, y0>>> with x = e, y = v^0
    GradedElt acc{0, sym(R, "v0")};
    const GradedElt x0{0, e};
    for (int len = 1; len <= n; ++len) {
      acc = sabinin_binary(x0, acc);
      check.require(!acc.value.is_zero(), [&] {
        return "iterated binary bracket of length " + std::to_string(len) + " vanished";
      });
    }
  }
  return {check.ok, check.detail("split_null:2 and split_null:3, m = 1..n+1")};
}

// 9 --------------------------------------------------------------------------
std::pair<bool, std::string> criterion_9(const Context& ctx) {
  Check check;
  int cases = 0;
  for (int n = 0; n <= 2; ++n) {
    std::vector<std::vector<int>> tuples{{}};
    for (int k = 0; k < n; ++k) {
      std::vector<std::vector<int>> next;
      for (const auto& t : tuples) {
        for (int d = 1; d <= 3; ++d) {
          auto u = t;
          u.push_back(d);
          next.push_back(u);
        }
      }
      tuples = next;
    }
    for (const auto& degs : tuples) {
      for (int dy = 1; dy <= 3; ++dy) {
        for (int dz = 1; dz <= 3; ++dz) {
          int total = dy + dz;
          for (int d : degs) total += d;
          if (total > 5) continue;
          const FiltrationBracket fb = filtration_bracket(degs, dy, dz, 6);
          const GradedElt want = n == 0 ? sabinin_binary(fb.y, fb.z) : ctx.closed(fb.xs, fb.y, fb.z);
          ++cases;
          check.require(fb.value == want, [&] {
            std::string d;
            for (int x : degs) d += std::to_string(x) + ",";
            return "degrees (" + d + ") y=" + std::to_string(dy) + " z=" + std::to_string(dz) +
                   ": loop " + fb.value.value.to_string() + " vs closed " + want.value.to_string();
          });
        }
      }
    }
  }
  return {check.ok, check.detail(std::to_string(cases) + " degree tuples, n = 0..2, total <= 5")};
}

// 10 -------------------------------------------------------------------------
std::pair<bool, std::string> criterion_10(const Context& ctx) {
  const int T = 6;
  auto F = builtin::free_algebra({"a", "b"}, T);
  Rng rng(ctx.options.seed + 10);
  const std::vector<DeviationExpr> shapes{
      {DeviationBase::Commutator, {}},   {DeviationBase::Associator, {}},
      {DeviationBase::Commutator, {1}},  {DeviationBase::Commutator, {2}},
      {DeviationBase::Associator, {1}},  {DeviationBase::Associator, {2}},
      {DeviationBase::Associator, {3}},  {DeviationBase::Associator, {1, 3}}};
  Check check;
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> scalar(-3, 3);
  for (const auto& shape : shapes) {
    const int arity = shape.arity();
    for (int s = 0; s < 100; ++s) {
      std::vector<int> depths(arity, 1);
      int total = arity;
      for (auto& d : depths) {
        if (total < T && coin(rng)) {
          ++d;
          ++total;
        }
      }
      std::vector<Series> args;
      for (int d : depths) args.push_back(random_series(F, T, true, rng, d));
      const Series value = deviation_apply(shape, args);
      const Depth got = depth(value);
      check.require(got.infinite() || *got.value >= total, [&] {
        return shape.to_string() + " depth " + std::to_string(*got.value) + " < " + std::to_string(total);
      });
      // Balanced: a unit argument gives the unit.
      std::uniform_int_distribution<int> which(0, arity - 1);
      const int u = which(rng);
      std::vector<Series> with_unit = args;
      with_unit[u] = Series::unit(F, T, true);
      check.require(deviation_apply(shape, with_unit).is_unit(),
                    [&] { return shape.to_string() + " not balanced in argument " + std::to_string(u + 1); });
      // Leading stratum: a new tail leaves it unchanged, scaling the leading
      // coefficient of one argument scales it.
      const AlgElt lead = value.coeff(total);
      const int v = which(rng);
      int lambda = 0;
      while (lambda == 0) lambda = scalar(rng);
      Series tail = random_series(F, T, true, rng, depths[v]);
      Series changed(F, T, true);
      changed.set_coeff(depths[v], args[v].coeff(depths[v]) * Rational(lambda));
      for (int k = depths[v] + 1; k <= T; ++k) changed.set_coeff(k, tail.coeff(k));
      std::vector<Series> altered = args;
      altered[v] = changed;
      const AlgElt lead2 = deviation_apply(shape, altered).coeff(total);
      check.require(lead2 == lead * Rational(lambda), [&] {
        return shape.to_string() + " leading coefficient not multilinear in argument " +
               std::to_string(v + 1);
      });
    }
  }
  return {check.ok, check.detail("8 word shapes x 100 instances over free:a,b:6")};
}

// 11 -------------------------------------------------------------------------
std::pair<bool, std::string> criterion_11a(const Context&) {
  const KlopschSolution s = klopsch_witness(1, 3, KlopschTarget::BA);
  const bool ok = s.lambda == make_rational(1, 2) && s.mu == make_rational(-1, 3);
  const AlgElt at_literal = klopsch_verify(1, 3, make_rational(1, 2), make_rational(-1, 3));
  std::string detail = "klopsch_witness(1,3,BA) = (" + to_string(s.lambda) + ", " + to_string(s.mu) +
                       "), expected (1/2, -1/3); (1/2, -1/3) evaluates to " + at_literal.to_string();
  return {ok, detail};
}

std::pair<bool, std::string> criterion_11b(const Context&) {
  Check check;
  int cases = 0;
  for (int n = 1; n <= 2; ++n) {
    for (int m = n + 2; m <= 6; ++m) {
      for (KlopschTarget target : {KlopschTarget::AB, KlopschTarget::BA}) {
        const KlopschSolution s = klopsch_witness(n, m, target);
        const AlgElt got = klopsch_verify(n, m, s.lambda, s.mu);
        auto algebra = got.algebra();
        const AlgElt alpha = sym(algebra, "alpha"), beta = sym(algebra, "beta");
        const AlgElt want = target == KlopschTarget::AB ? alpha * beta : beta * alpha;
        ++cases;
        check.require(got == want, [&] {
          return "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + got.to_string();
        });
      }
    }
  }
  return {check.ok, check.detail(std::to_string(cases) + " (n, m, target) round trips")};
}

// 12 -------------------------------------------------------------------------
std::pair<bool, std::string> criterion_12(const Context&) {
  auto E = builtin::ev_algebra();
  const AlgElt e = sym(E, "e"), v = sym(E, "v");
  auto br = [](const CoeffPoly& f, const CoeffPoly& g) { return wronskian_bracket(f, g); };
  const CoeffPoly value = standard_identity<CoeffPoly>(
      br, {CoeffPoly::monomial(e, 1), CoeffPoly::monomial(e, 2), CoeffPoly::monomial(v, 1),
           CoeffPoly::monomial(e, 0)},
      CoeffPoly::monomial(e, 0));
  const CoeffPoly want = CoeffPoly::monomial(v * Rational(4), 0);
  return {value == want, "St5(et, et^2, vt, e, e) = " + value.to_string()};
}

// 13 -------------------------------------------------------------------------
std::pair<bool, std::string> criterion_13(const Context&) {
  Check check;
  std::string summary;
  for (const char* name : {"ev", "split_null:2"}) {
    auto A = builtin::from_spec(name);
    const CommIdealReport pred = check_s_comm_ideal(A);
    check.require(pred.s_brackets_zero, [&] { return std::string(name) + ": S[S,S] != 0"; });
    const IdentityReport r = check_st_identity(A, 6, 3);
    summary += std::string(summary.empty() ? "" : "; ") + name + " S[S,S]=0 " +
               (pred.s_brackets_zero ? "yes" : "no") + ", St6 " + r.status();
    if (!r.pass) {
      std::string w;
      for (const auto& x : r.witness) w += (w.empty() ? "" : ", ") + x;
      summary += " at (" + w + ") = " + r.value;
    }
    check.require(r.pass, [&] { return std::string(name) + ": St6 fails"; });
  }
  return {check.ok, summary};
}

// 14 -------------------------------------------------------------------------
std::pair<bool, std::string> criterion_14(const Context&) {
  auto U = builtin::upper_triangular(3);
  const CommIdealReport pred = check_s_comm_ideal(U);
  const IdentityReport r = check_st_identity(U, 5, 3);
  const bool ok = pred.s_brackets_zero && pred.brackets_s3_zero && r.pass;
  return {ok, std::string("ut:3 predicates ") + (pred.s_brackets_zero ? "1" : "0") +
                  (pred.brackets_s3_zero ? "1" : "0") + ", St5 " + r.status() + " on " +
                  std::to_string(r.checked) + " tuples" + (r.pass ? "" : ", value " + r.value)};
}

// 15 -------------------------------------------------------------------------
std::pair<bool, std::string> criterion_15(const Context& ctx) {
  const int T = 6;
  auto F = builtin::free_algebra({"a", "b", "c"}, T);
  Rng rng(ctx.options.seed + 15);
  Check check;
  const Series unit = Series::unit(F, T, true);
  struct Product {
    const char* name;
    Series (*mul)(const Series&, const Series&);
    Series (*ldiv)(const Series&, const Series&);
    Series (*rdiv)(const Series&, const Series&);
  };
  const Product products[] = {{"o", compose, left_divide, right_divide},
                              {"*", star, star_left_divide, star_right_divide}};
  for (int s = 0; s < 250; ++s) {
    const Series x = random_series(F, T, true, rng);
    const Series y = random_series(F, T, true, rng);
    for (const auto& p : products) {
      const std::string tag = std::string(p.name) + " sample " + std::to_string(s) + ": ";
      const Series xy = p.mul(x, y);
      check.require(p.ldiv(x, xy) == y, [&] { return tag + "x\\(xy) != y"; });
      check.require(p.mul(x, p.ldiv(x, y)) == y, [&] { return tag + "x(x\\y) != y"; });
      check.require(p.rdiv(xy, y) == x, [&] { return tag + "(xy)/y != x"; });
      check.require(p.mul(p.rdiv(x, y), y) == x, [&] { return tag + "(x/y)y != x"; });
      check.require(p.ldiv(x, x) == unit && p.rdiv(y, y) == unit, [&] { return tag + "x\\x or y/y is not the unit"; });
    }
  }
  return {check.ok, check.detail("500 random series (250 pairs) over free:a,b,c:6, both products")};
}

struct Entry {
  const char* id;
  const char* group;
  const char* name;
  std::optional<double> limit;
  std::pair<bool, std::string> (*run)(const Context&);
};

const Entry kEntries[] = {
    {"1", "1", "substitution product of three degree-1 series", 1.0, criterion_1},
    {"2", "2", "upper triangular 3x3: product formula and trivial associators", 5.0, criterion_2},
    {"3", "3", "group criterion agrees with associator sampling on builtins", std::nullopt, criterion_3},
    {"4", "4", "linearized composition equals sum (m+1) a_m b", std::nullopt, criterion_4},
    {"5", "5", "p-operation recursion equals closed-form brackets", 60.0, criterion_5},
    {"6", "6", "binary, one- and two-argument bracket displays", std::nullopt, criterion_6},
    {"7", "7", "Laurent window: Witt table and vanishing higher brackets", std::nullopt, criterion_7},
    {"8", "8", "split-null extensions: e-family brackets and nonnilpotence", std::nullopt, criterion_8},
    {"9", "9", "filtration brackets of the loop equal closed-form brackets", 300.0, criterion_9},
    {"10", "10", "balancedness, depth superadditivity, leading-stratum multilinearity", std::nullopt, criterion_10},
    {"11a", "11", "lambda, mu witness for n=1, m=3, target beta*alpha is (1/2, -1/3)", std::nullopt, criterion_11a},
    {"11b", "11", "lambda, mu witnesses round-trip for n <= 2, m <= 6", std::nullopt, criterion_11b},
    {"12", "12", "St5(et, et^2, vt, e, e) = 4v over the ev algebra", 1.0, criterion_12},
    {"13", "13", "St6 on ev and split_null:2 with t-degree <= 3", 120.0, criterion_13},
    {"14", "14", "St5 on upper triangular 3x3 with t-degree <= 3", std::nullopt, criterion_14},
    {"15", "15", "loop axioms for o and * on random series", 30.0, criterion_15},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const Context ctx{options};
  std::vector<CriterionResult> results;
  for (const Entry& entry : kEntries) {
    if (!options.only.empty() && !options.only.count(entry.id) && !options.only.count(entry.group)) {
      continue;
    }
    CriterionResult r{entry.id, entry.name, false, 0, entry.limit, ""};
    const auto start = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = entry.run(ctx);
      r.pass = ok;
      r.detail = std::move(detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.limit && r.seconds > *r.limit) {
      r.pass = false;
      r.detail += " (over the " + std::to_string(static_cast<int>(*r.limit)) + " s limit)";
    }
    results.push_back(std::move(r));
  }
  return results;
}

json acceptance_to_json(const std::vector<CriterionResult>& results,
                        const AcceptanceOptions& options) {
  json list = json::array();
  int passed = 0;
  for (const auto& r : results) {
    passed += r.pass;
    json item{{"id", r.id},
              {"name", r.name},
              {"status", r.pass ? "PASS" : "FAIL"},
              {"seconds", r.seconds},
              {"detail", r.detail}};
    item["limit_seconds"] = r.limit ? json(*r.limit) : json(nullptr);
    list.push_back(item);
  }
  return json{{"criteria", list},
              {"passed", passed},
              {"failed", static_cast<int>(results.size()) - passed},
              {"seed", options.seed},
              {"flip_closed_sign", options.flip_closed_sign}};
}

std::string acceptance_table(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  int passed = 0;
  for (const auto& r : results) {
    passed += r.pass;
    out << (r.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(4) << r.id << std::right
        << std::fixed << std::setprecision(3) << std::setw(9) << r.seconds << " s  " << r.name
        << " | " << r.detail << "\n";
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return out.str();
}

}  // namespace fpsloop
