#include "ara/analysis/sensitivity.hpp"

#include <optional>

#include "ara/errors.hpp"

namespace ara::analysis {

SensitivityReport sensitivity_sweep(const DecisionModel& model, const std::string& parameter,
                                    const std::vector<double>& values,
                                    const SolverBudgets& budgets, const stoch::RngStream& rng,
                                    const Execution& exec) {
  // Throws ConfigurationError listing valid labels for unknown knobs.
  const bool attacker_side = model.is_attacker_parameter(parameter);
  if (values.empty()) throw ArgumentError("sensitivity sweep needs at least one value");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) {
      throw ArgumentError("sensitivity sweep values must be strictly increasing");
    }
  }

  SensitivityReport report;
  report.parameter = parameter;
  report.values = values;

  const std::vector<casestudy::DecisionPair> pairs = model.decisions();
  std::optional<AttackPolicyTable> shared_table;
  if (!attacker_side) shared_table = model.attack_table(budgets, rng.derive(kAttackPhase), exec);

  for (double value : values) {
    const auto perturbed = model.with_parameter(parameter, value);
    const AttackPolicyTable table =
        shared_table ? *shared_table
                     : perturbed->attack_table(budgets, rng.derive(kAttackPhase), exec);
    const DefenderRanking ranking = rank_decisions(*perturbed, table, pairs, budgets, rng, exec);
    report.rows.push_back({value, ranking.best().decision, ranking.best().expected_utility,
                           ranking.best().standard_error});
  }
  for (const auto& row : report.rows) {
    report.argmax_changed = report.argmax_changed || row.best_decision != report.rows.front().best_decision;
  }
  return report;
}

}  // namespace ara::analysis
