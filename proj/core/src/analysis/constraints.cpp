#include "ara/analysis/constraints.hpp"

#include <set>
#include <sstream>

#include "ara/errors.hpp"

namespace ara::analysis {

double upfront_cost(const casestudy::DecisionPair& pair, const casestudy::DefenderParams& params) {
  return casestudy::portfolio_cost(pair.portfolio, params) +
         casestudy::insurance_premium(pair.insurance, pair.portfolio, params);
}

bool satisfies(const casestudy::DecisionPair& pair, const ConstraintSet& constraints,
               const casestudy::DefenderParams& params) {
  if (constraints.budget_limit_eur && upfront_cost(pair, params) > *constraints.budget_limit_eur) {
    return false;
  }
  for (const auto& req : constraints.insurance_requirements) {
    if (pair.insurance == req.product && !req.required(pair.portfolio)) return false;
  }
  for (const auto& pred : constraints.custom_predicates) {
    if (!pred.allows(pair)) return false;
  }
  return true;
}

std::vector<casestudy::DecisionPair> apply_constraints(
    std::span<const casestudy::DecisionPair> pairs, const ConstraintSet& constraints,
    const casestudy::DefenderParams& params) {
  std::vector<casestudy::DecisionPair> kept;
  std::set<std::string> binding;

  for (const auto& pair : pairs) {
    bool ok = true;
    if (constraints.budget_limit_eur && upfront_cost(pair, params) > *constraints.budget_limit_eur) {
      std::ostringstream label;
      label << "budget <= " << *constraints.budget_limit_eur;
      binding.insert(label.str());
      ok = false;
    }
    for (const auto& req : constraints.insurance_requirements) {
      if (pair.insurance == req.product && !req.required(pair.portfolio)) {
        binding.insert(req.label);
        ok = false;
      }
    }
    for (const auto& pred : constraints.custom_predicates) {
      if (!pred.allows(pair)) {
        binding.insert(pred.label);
        ok = false;
      }
    }
    if (ok) kept.push_back(pair);
  }

  if (kept.empty()) {
    std::string msg = "no decision satisfies the constraints";
    if (!binding.empty()) {
      msg += "; binding:";
      for (const auto& b : binding) msg += " [" + b + "]";
    }
    throw InfeasibleError(msg);
  }
  return kept;
}

}  // namespace ara::analysis
