#include "fpsloop/random.hpp"

#include <map>

namespace fpsloop {

namespace {

AlgElt draw_from(const AlgebraPtr& algebra, const std::vector<Word>& pool, Rng& rng,
                 const RandomOptions& options) {
  AlgElt out(algebra);
  if (pool.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(1, std::max(1, options.max_terms));
  for (int n = count(rng); n > 0; --n) out.add_term(pool[pick(rng)], random_rational(rng, options.fractions));
  return out;
}

}  // namespace

Rational random_rational(Rng& rng, bool fractions) {
  std::uniform_int_distribution<int> num(1, 3);
  std::bernoulli_distribution negative(0.5);
  std::bernoulli_distribution frac(fractions ? 0.2 : 0.0);
  std::uniform_int_distribution<int> den(2, 4);
  long n = num(rng) * (negative(rng) ? -1 : 1);
  long d = frac(rng) ? den(rng) : 1;
  return make_rational(n, d);
}

AlgElt random_element(const AlgebraPtr& algebra, Rng& rng, std::optional<int> degree,
                      const RandomOptions& options) {
  return draw_from(algebra, degree ? algebra->basis_of_degree(*degree) : algebra->basis(), rng,
                   options);
}

Series random_series(const AlgebraPtr& algebra, int truncation, bool graded_mode, Rng& rng,
                     int depth, const RandomOptions& options) {
  const bool by_degree = graded_mode && algebra->graded();
  std::vector<Word> all;
  if (!by_degree) all = algebra->basis();
  std::map<int, std::vector<Word>> by_slot;
  std::bernoulli_distribution fill(options.fill);
  Series out(algebra, truncation, graded_mode);
  for (int k = std::max(1, depth); k <= truncation; ++k) {
    if (k > depth && !fill(rng)) continue;
    const std::vector<Word>& pool =
        by_degree ? by_slot.try_emplace(k, algebra->basis_of_degree(k)).first->second : all;
    out.set_coeff(k, draw_from(algebra, pool, rng, options));
  }
  return out;
}

}  // namespace fpsloop
