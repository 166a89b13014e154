#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ara/casestudy/defender.hpp"

namespace ara::analysis {

// An insurer's requirement: buying `product` requires `required` to hold for
// the control portfolio.
struct InsuranceRequirement {
  std::string label;
  casestudy::InsurancePlan product;
  std::function<bool(const casestudy::ControlPortfolio&)> required;
};

struct DecisionPredicate {
  std::string label;
  std::function<bool(const casestudy::DecisionPair&)> allows;
};

struct ConstraintSet {
  // Upper bound on controls plus premium, euros.
  std::optional<double> budget_limit_eur;
  std::vector<InsuranceRequirement> insurance_requirements;
  std::vector<DecisionPredicate> custom_predicates;

  bool empty() const noexcept {
    return !budget_limit_eur && insurance_requirements.empty() && custom_predicates.empty();
  }
};

/// Controls cost plus premium of a pair.
double upfront_cost(const casestudy::DecisionPair& pair, const casestudy::DefenderParams& params);

bool satisfies(const casestudy::DecisionPair& pair, const ConstraintSet& constraints,
               const casestudy::DefenderParams& params);

/// Pairs satisfying every constraint, in input order. Throws InfeasibleError
/// naming the constraints that removed pairs when nothing survives.
std::vector<casestudy::DecisionPair> apply_constraints(
    std::span<const casestudy::DecisionPair> pairs, const ConstraintSet& constraints,
    const casestudy::DefenderParams& params);

}  // namespace ara::analysis
