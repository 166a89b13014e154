#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ara/stochastics/rng.hpp"

namespace ara {

/// One defender alternative, e.g. a (portfolio, insurance) pair.
struct DecisionInfo {
  std::string label;
  // Key into the AttackPolicyTable; empty when the decision faces no attacker.
  std::string defence;
  // Deterministic spend (controls plus premium); used to break EU ties and
  // for budget constraints.
  double upfront_cost = 0.0;
};

/// Samples the defender's total cost (euros, excluding the baseline cost) for
/// decision `decision` given the attack distribution of its defence.
using CostSampler = std::function<double(std::size_t decision, std::span<const double> attack_row,
                                         stoch::RngStream& rng)>;
using UtilityFn = std::function<double(double cost)>;

struct DefenderProblem {
  std::vector<DecisionInfo> decisions;
  CostSampler cost_sampler;
  UtilityFn utility;
  double baseline_cost = 0.0;

  /// Non-empty decision space, callable contracts, and a utility that is
  /// finite and non-increasing on a cost grid. Throws ConfigurationError.
  void validate() const;
};

/// Estimated p(attack | defence), one row per defence.
struct AttackPolicyTable {
  std::vector<std::string> defences;
  std::vector<int> attack_space;
  std::vector<std::vector<double>> probabilities;
  std::int64_t draws_used = 0;

  bool contains(std::string_view defence) const;
  /// Throws ConfigurationError naming the defence when absent.
  std::span<const double> row(std::string_view defence) const;
  /// Rows are probability vectors (entries in [0,1], sum 1 within 1e-9).
  void validate() const;

  static AttackPolicyTable point_mass(std::vector<std::string> defences,
                                      std::vector<int> attack_space, int attack);
};

struct EvaluationResult {
  std::string decision;
  double expected_utility = 0.0;
  double standard_error = 0.0;
  std::int64_t samples = 0;
  double min_utility = 0.0;
  double max_utility = 0.0;
};

}  // namespace ara
