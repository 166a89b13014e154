#include "ara/stochastics/bayes.hpp"

#include <cmath>
#include <string>

#include "ara/errors.hpp"

namespace ara::stoch {

BetaPosterior beta_binomial_update(double prior_a, double prior_b, std::int64_t successes,
                                   std::int64_t trials) {
  if (!(std::isfinite(prior_a) && prior_a > 0) || !(std::isfinite(prior_b) && prior_b > 0)) {
    throw ArgumentError("beta prior parameters must be positive");
  }
  if (successes < 0 || trials < 0) {
    throw ArgumentError("successes and trials must be non-negative");
  }
  if (successes > trials) {
    throw ArgumentError("successes (" + std::to_string(successes) + ") exceed trials (" +
                        std::to_string(trials) + ")");
  }
  return {prior_a + static_cast<double>(successes),
          prior_b + static_cast<double>(trials - successes)};
}

}  // namespace ara::stoch
