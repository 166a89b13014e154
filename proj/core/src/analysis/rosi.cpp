#include "ara/analysis/rosi.hpp"

#include "ara/errors.hpp"

namespace ara::analysis {

RosiCurve rosi_curve(const DecisionModel& model, const std::vector<double>& budgets_eur,
                     const SolverBudgets& budgets, const stoch::RngStream& rng,
                     const Execution& exec) {
  if (budgets_eur.empty()) throw ArgumentError("ROSI needs at least one budget");
  for (std::size_t i = 1; i < budgets_eur.size(); ++i) {
    if (budgets_eur[i] < budgets_eur[i - 1]) throw ArgumentError("ROSI budgets must be sorted");
  }

  // A decision's estimate does not depend on which other decisions are
  // ranked, so ranking the full set once and scanning it per budget equals
  // re-ranking every constrained subset.
  const AttackPolicyTable table = model.attack_table(budgets, rng.derive(kAttackPhase), exec);
  const std::vector<casestudy::DecisionPair> all = model.decisions();
  const DefenderRanking ranking = rank_decisions(model, table, all, budgets, rng, exec);

  RosiCurve curve;
  for (double budget : budgets_eur) {
    RosiPoint point;
    point.budget_eur = budget;
    point.infeasibility = "no decision fits the budget";
    for (std::size_t r = 0; r < ranking.ranked.size(); ++r) {
      const auto& pair = all[ranking.order[r]];
      const double spend = model.upfront_cost(pair);
      if (spend > budget) continue;
      point.feasible = true;
      point.infeasibility.clear();
      point.best_decision = ranking.ranked[r].decision;
      point.expected_utility = ranking.ranked[r].expected_utility;
      point.standard_error = ranking.ranked[r].standard_error;
      point.spend_eur = spend;
      break;
    }
    curve.points.push_back(point);
  }
  return curve;
}

}  // namespace ara::analysis
