#pragma once

#include <string>
#include <vector>

#include "ara/analysis/decision_model.hpp"

namespace ara::analysis {

struct RosiPoint {
  double budget_eur = 0.0;
  bool feasible = false;
  std::string best_decision;  // empty when infeasible
  double expected_utility = 0.0;
  double standard_error = 0.0;
  double spend_eur = 0.0;  // controls plus premium of the optimum
  std::string infeasibility;  // reason when !feasible
};

struct RosiCurve {
  std::vector<RosiPoint> points;
};

/// Best decision and its expected utility per security budget (controls plus
/// premium). Decisions are ranked once under common random numbers, so the
/// curve is non-decreasing in the budget. Infeasible budgets are recorded.
RosiCurve rosi_curve(const DecisionModel& model, const std::vector<double>& budgets_eur,
                     const SolverBudgets& budgets, const stoch::RngStream& rng,
                     const Execution& exec = {});

}  // namespace ara::analysis
