#include "ara/core/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ara/errors.hpp"

namespace ara {

EvaluationResult estimate_expected_utility(const DefenderProblem& problem, std::size_t decision,
                                           const AttackPolicyTable& attack_table, std::int64_t n,
                                           const stoch::RngStream& rng, const Execution& exec) {
  if (n < 1) throw ArgumentError("sample size must be >= 1");
  if (decision >= problem.decisions.size()) throw ArgumentError("decision index out of range");

  const DecisionInfo& info = problem.decisions[decision];
  const std::span<const double> row =
      info.defence.empty() ? std::span<const double>{} : attack_table.row(info.defence);

  std::vector<double> utilities(static_cast<std::size_t>(n));
  parallel_for(utilities.size(), exec.threads, [&](std::size_t j) {
    stoch::RngStream stream = rng.derive({kSampleStream, static_cast<std::uint64_t>(j)});
    const double cost = problem.baseline_cost + problem.cost_sampler(decision, row, stream);
    if (!std::isfinite(cost)) {
      throw EvaluationError("non-finite cost sampled for decision '" + info.label + "'");
    }
    const double u = problem.utility(cost);
    if (!std::isfinite(u)) {
      throw EvaluationError("non-finite utility for decision '" + info.label + "'");
    }
    utilities[j] = u;
  });

  // Serial two-pass reduction in sample order keeps results independent of
  // the thread count.
  double sum = 0.0;
  double lo = utilities.front();
  double hi = utilities.front();
  for (double u : utilities) {
    sum += u;
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double u : utilities) ss += (u - mean) * (u - mean);
  const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;

  EvaluationResult result;
  result.decision = info.label;
  result.expected_utility = std::clamp(mean, lo, hi);
  result.standard_error = sd / std::sqrt(static_cast<double>(n));
  result.samples = n;
  result.min_utility = lo;
  result.max_utility = hi;
  return result;
}

double utility_loss(const EvaluationResult& psi_n, const EvaluationResult& psi_r) noexcept {
  return psi_n.expected_utility - psi_r.expected_utility;
}

}  // namespace ara
