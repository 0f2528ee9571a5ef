#pragma once

#include <optional>
#include <random>

#include "fpsloop/series.hpp"

namespace fpsloop {

using Rng = std::mt19937_64;

struct RandomOptions {
  int max_terms = 2;          // basis monomials per coefficient
  double fill = 0.7;          // chance that a slot past the depth is nonzero
  bool fractions = true;      // occasionally draw p/q instead of an integer
};

Rational random_rational(Rng& rng, bool fractions = true);

// Sparse combination of basis monomials, homogeneous of the given degree if
// one is requested (zero when that degree is empty).
AlgElt random_element(const AlgebraPtr& algebra, Rng& rng, std::optional<int> degree,
                      const RandomOptions& options = {});

// Random series with depth exactly `depth` whenever slot `depth` admits a
// nonzero coefficient. Graded mode over a graded algebra draws slot k from
// degree k.
Series random_series(const AlgebraPtr& algebra, int truncation, bool graded_mode, Rng& rng,
                     int depth = 1, const RandomOptions& options = {});

}  // namespace fpsloop
