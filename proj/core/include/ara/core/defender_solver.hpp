#pragma once

#include <cstdint>
#include <vector>

#include "ara/core/estimator.hpp"
#include "ara/core/parallel.hpp"
#include "ara/core/problem.hpp"

namespace ara {

struct DefenderRanking {
  // Sorted by expected utility (desc), then upfront cost (asc), then label.
  std::vector<EvaluationResult> ranked;
  // ranked[k] corresponds to problem.decisions[order[k]].
  std::vector<std::size_t> order;

  const EvaluationResult& best() const { return ranked.front(); }
  std::size_t best_index() const { return order.front(); }
};

/// Exhaustive expected-utility maximisation over the decision space. All
/// decisions share the sample streams of `rng` (common random numbers).
DefenderRanking solve_defender(const DefenderProblem& problem,
                               const AttackPolicyTable& attack_table, std::int64_t n,
                               const stoch::RngStream& rng, const Execution& exec = {});

}  // namespace ara
