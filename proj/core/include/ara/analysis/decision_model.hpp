#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ara/casestudy/model.hpp"
#include "ara/core/defender_solver.hpp"
#include "ara/core/parallel.hpp"
#include "ara/core/problem.hpp"
#include "ara/stochastics/rng.hpp"

namespace ara::analysis {

struct SolverBudgets {
  std::int64_t k_draws = 1000;
  std::int64_t m_inner = 1;
  std::int64_t n_samples = 100000;

  bool operator==(const SolverBudgets&) const = default;
};

/// A re-solvable decision model: the handle the analyses perturb and solve.
class DecisionModel {
 public:
  virtual ~DecisionModel() = default;

  virtual std::vector<casestudy::DecisionPair> decisions() const = 0;
  virtual double upfront_cost(const casestudy::DecisionPair& pair) const = 0;
  virtual double premium(const casestudy::DecisionPair& pair) const = 0;

  virtual AttackPolicyTable attack_table(const SolverBudgets& budgets, const stoch::RngStream& rng,
                                         const Execution& exec) const = 0;
  virtual DefenderProblem defender_problem(std::span<const casestudy::DecisionPair> pairs,
                                           double premium_multiplier = 1.0) const = 0;

  // Scalar knobs for one-at-a-time sensitivity.
  virtual std::vector<std::string> parameter_labels() const = 0;
  virtual double parameter(std::string_view label) const = 0;
  virtual std::unique_ptr<DecisionModel> with_parameter(std::string_view label,
                                                        double value) const = 0;
  // True when changing the knob changes the attacker's problem.
  virtual bool is_attacker_parameter(std::string_view label) const = 0;
};

class CaseStudyModel final : public DecisionModel {
 public:
  explicit CaseStudyModel(casestudy::CaseStudyParams params);

  const casestudy::CaseStudyParams& params() const noexcept { return params_; }

  std::vector<casestudy::DecisionPair> decisions() const override;
  double upfront_cost(const casestudy::DecisionPair& pair) const override;
  double premium(const casestudy::DecisionPair& pair) const override;
  AttackPolicyTable attack_table(const SolverBudgets& budgets, const stoch::RngStream& rng,
                                 const Execution& exec) const override;
  DefenderProblem defender_problem(std::span<const casestudy::DecisionPair> pairs,
                                   double premium_multiplier = 1.0) const override;
  std::vector<std::string> parameter_labels() const override;
  double parameter(std::string_view label) const override;
  std::unique_ptr<DecisionModel> with_parameter(std::string_view label,
                                                double value) const override;
  bool is_attacker_parameter(std::string_view label) const override;

 private:
  casestudy::CaseStudyParams params_;
};

// Phase labels: attack tables use rng.derive(kAttackPhase), defender
// evaluations rng.derive(kDefendPhase).
inline constexpr std::uint64_t kAttackPhase = 0x41;
inline constexpr std::uint64_t kDefendPhase = 0x44;

struct ModelSolution {
  AttackPolicyTable attack_table;
  std::vector<casestudy::DecisionPair> pairs;
  DefenderRanking ranking;

  const casestudy::DecisionPair& best_pair() const { return pairs[ranking.best_index()]; }
};

/// Attack table then defender ranking over `pairs` (all decisions when empty).
ModelSolution solve_model(const DecisionModel& model, const SolverBudgets& budgets,
                          const stoch::RngStream& rng, const Execution& exec = {},
                          std::span<const casestudy::DecisionPair> pairs = {});

/// Defender ranking against a precomputed attack table.
DefenderRanking rank_decisions(const DecisionModel& model, const AttackPolicyTable& table,
                               std::span<const casestudy::DecisionPair> pairs,
                               const SolverBudgets& budgets, const stoch::RngStream& rng,
                               const Execution& exec = {});

}  // namespace ara::analysis
