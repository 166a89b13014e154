#include "ara/core/defender_solver.hpp"

#include <algorithm>
#include <numeric>

#include "ara/errors.hpp"

namespace ara {

DefenderRanking solve_defender(const DefenderProblem& problem,
                               const AttackPolicyTable& attack_table, std::int64_t n,
                               const stoch::RngStream& rng, const Execution& exec) {
  problem.validate();
  for (const auto& decision : problem.decisions) {
    if (!decision.defence.empty() && !attack_table.contains(decision.defence)) {
      throw ConfigurationError("defence '" + decision.defence + "' of decision '" +
                               decision.label + "' is missing from the attack table");
    }
  }

  const std::size_t count = problem.decisions.size();
  std::vector<EvaluationResult> results(count);
  // Parallel across decisions; each estimate runs serially.
  parallel_for(count, exec.threads, [&](std::size_t i) {
    results[i] = estimate_expected_utility(problem, i, attack_table, n, rng, Execution{1});
  });

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (results[a].expected_utility != results[b].expected_utility) {
      return results[a].expected_utility > results[b].expected_utility;
    }
    const auto& da = problem.decisions[a];
    const auto& db = problem.decisions[b];
    if (da.upfront_cost != db.upfront_cost) return da.upfront_cost < db.upfront_cost;
    return da.label < db.label;
  });

  DefenderRanking ranking;
  ranking.order = order;
  ranking.ranked.reserve(count);
  for (std::size_t i : order) ranking.ranked.push_back(std::move(results[i]));
  return ranking;
}

}  // namespace ara
