#pragma once

#include <cstdint>

namespace ara::stoch {

struct BetaPosterior {
  double a;
  double b;

  double mean() const noexcept { return a / (a + b); }
};

/// Conjugate update of a Beta(prior_a, prior_b) prior with binomial data.
/// Throws ArgumentError when successes > trials, counts are negative or a
/// prior parameter is not positive.
BetaPosterior beta_binomial_update(double prior_a, double prior_b, std::int64_t successes,
                                   std::int64_t trials);

}  // namespace ara::stoch
