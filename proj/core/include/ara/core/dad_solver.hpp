#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ara/core/attacker_solver.hpp"
#include "ara/core/defender_solver.hpp"
#include "ara/errors.hpp"

namespace ara {

/// Defence-attack-defence problem: the defender commits preventive controls,
/// the attacker observes them and acts, then reactive controls apply. Reactive
/// choices only enter the cost sampler; attack probabilities depend on the
/// preventive choice alone.
template <class Preventive, class Reactive>
struct DadProblem {
  std::vector<Labelled<Preventive>> preventive;
  std::vector<Labelled<Reactive>> reactive;
  // Unset means every pair is feasible.
  std::function<bool(const Preventive&, const Reactive&)> feasible;
  std::function<double(const Preventive&, const Reactive&, std::span<const double> attack_row,
                       stoch::RngStream&)>
      cost_sampler;
  UtilityFn utility;
  double baseline_cost = 0.0;
  // Optional; tie-break and reporting only.
  std::function<double(const Preventive&, const Reactive&)> upfront_cost;
};

struct DadSolution {
  std::size_t preventive_index = 0;
  std::size_t reactive_index = 0;
  std::string preventive;
  std::string reactive;
  AttackPolicyTable attack_table;
  DefenderRanking ranking;
  // (preventive, reactive) index of each decision in the ranking's problem.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

inline constexpr std::uint64_t kAttackerPhase = 0x4154;
inline constexpr std::uint64_t kDefenderPhase = 0x4446;

template <class Preventive, class Reactive, class Hyper>
DadSolution solve_defence_attack_defence(const DadProblem<Preventive, Reactive>& problem,
                                         const AttackerProblem<Preventive, Hyper>& attacker,
                                         std::int64_t n, std::int64_t k_draws,
                                         std::int64_t m_inner, const stoch::RngStream& rng,
                                         const Execution& exec = {}) {
  if (!problem.cost_sampler || !problem.utility) {
    throw ConfigurationError("defence-attack-defence problem has an unset sampler or utility");
  }

  DadSolution solution;
  DefenderProblem defender;
  for (std::size_t p = 0; p < problem.preventive.size(); ++p) {
    for (std::size_t r = 0; r < problem.reactive.size(); ++r) {
      const auto& pre = problem.preventive[p];
      const auto& re = problem.reactive[r];
      if (problem.feasible && !problem.feasible(pre.value, re.value)) continue;
      solution.pairs.emplace_back(p, r);
      defender.decisions.push_back(
          {pre.label + "|" + re.label, pre.label,
           problem.upfront_cost ? problem.upfront_cost(pre.value, re.value) : 0.0});
    }
  }
  if (solution.pairs.empty()) {
    throw ConfigurationError("defence-attack-defence problem has no feasible (preventive, "
                             "reactive) pair");
  }

  defender.utility = problem.utility;
  defender.baseline_cost = problem.baseline_cost;
  defender.cost_sampler = [&](std::size_t decision, std::span<const double> row,
                              stoch::RngStream& stream) {
    const auto [p, r] = solution.pairs[decision];
    return problem.cost_sampler(problem.preventive[p].value, problem.reactive[r].value, row,
                                stream);
  };

  solution.attack_table = solve_attacker_distribution(
      attacker, std::span<const Labelled<Preventive>>(problem.preventive), k_draws, m_inner,
      rng.derive(kAttackerPhase), exec);
  solution.ranking =
      solve_defender(defender, solution.attack_table, n, rng.derive(kDefenderPhase), exec);

  const auto [p, r] = solution.pairs[solution.ranking.best_index()];
  solution.preventive_index = p;
  solution.reactive_index = r;
  solution.preventive = problem.preventive[p].label;
  solution.reactive = problem.reactive[r].label;
  return solution;
}

}  // namespace ara
