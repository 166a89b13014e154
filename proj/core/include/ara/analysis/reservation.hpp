#pragma once

#include <cstdint>
#include <functional>

#include "ara/analysis/decision_model.hpp"
#include "ara/core/problem.hpp"

namespace ara::analysis {

struct ReservationResult {
  double multiplier = 1.0;     // premium multiplier at indifference
  double premium_eur = 0.0;    // multiplier * baseline premium
  double baseline_premium_eur = 0.0;
  bool preferred = true;       // false: uninsured already better at baseline
  double insured_eu = 0.0;     // at the returned multiplier
  double alternative_eu = 0.0;
  int iterations = 0;
};

/// Bisection on the premium multiplier until the insured decision's expected
/// utility matches the alternative's within `tolerance`.
///
/// `problem_at(m)` must return a problem whose decision 0 is the insured
/// alternative with premiums scaled by m and decision 1 is the comparator.
/// Every evaluation uses `rng` (common random numbers), so the insured EU is
/// monotone in m.
ReservationResult reservation_price(const std::function<DefenderProblem(double)>& problem_at,
                                    const AttackPolicyTable& table, double baseline_premium_eur,
                                    std::int64_t n_samples, const stoch::RngStream& rng,
                                    double tolerance = 1e-4, const Execution& exec = {});

/// Maximum premium for `pair`'s product given its controls; the comparator is
/// the same controls without insurance.
ReservationResult insurance_reservation_price(const DecisionModel& model,
                                              const casestudy::DecisionPair& pair,
                                              const SolverBudgets& budgets,
                                              const stoch::RngStream& rng,
                                              const Execution& exec = {});

}  // namespace ara::analysis
