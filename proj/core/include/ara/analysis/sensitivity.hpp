#pragma once

#include <string>
#include <vector>

#include "ara/analysis/decision_model.hpp"

namespace ara::analysis {

struct SensitivityRow {
  double value = 0.0;
  std::string best_decision;
  double expected_utility = 0.0;
  double standard_error = 0.0;
};

struct SensitivityReport {
  std::string parameter;
  std::vector<double> values;
  std::vector<SensitivityRow> rows;
  bool argmax_changed = false;
};

/// One-at-a-time sweep of a registered scalar knob. Every point re-solves the
/// defender problem with the same streams as solve_model(); the attack table
/// is re-solved only for attacker-side knobs. `values` must be strictly
/// increasing.
SensitivityReport sensitivity_sweep(const DecisionModel& model, const std::string& parameter,
                                    const std::vector<double>& values,
                                    const SolverBudgets& budgets, const stoch::RngStream& rng,
                                    const Execution& exec = {});

}  // namespace ara::analysis
