#include "ara/analysis/reservation.hpp"

#include <cmath>

#include "ara/core/estimator.hpp"
#include "ara/errors.hpp"

namespace ara::analysis {

namespace {

constexpr int kMaxDoublings = 60;
constexpr int kMaxBisections = 200;

}  // namespace

ReservationResult reservation_price(const std::function<DefenderProblem(double)>& problem_at,
                                    const AttackPolicyTable& table, double baseline_premium_eur,
                                    std::int64_t n_samples, const stoch::RngStream& rng,
                                    double tolerance, const Execution& exec) {
  if (!(tolerance > 0)) throw ArgumentError("reservation tolerance must be > 0");

  ReservationResult out;
  out.baseline_premium_eur = baseline_premium_eur;
  {
    const DefenderProblem base = problem_at(1.0);
    if (base.decisions.size() < 2) {
      throw ConfigurationError("reservation problem needs an insured and a comparator decision");
    }
    out.alternative_eu =
        estimate_expected_utility(base, 1, table, n_samples, rng, exec).expected_utility;
  }
  auto insured_eu = [&](double m) {
    return estimate_expected_utility(problem_at(m), 0, table, n_samples, rng, exec)
        .expected_utility;
  };
  auto gap = [&](double m) { return insured_eu(m) - out.alternative_eu; };

  const double g1 = gap(1.0);
  out.insured_eu = g1 + out.alternative_eu;
  out.premium_eur = baseline_premium_eur;
  if (std::abs(g1) < tolerance) return out;
  if (g1 < 0) {
    out.preferred = false;
    return out;
  }

  double lo = 1.0;
  double hi = 2.0;
  int doublings = 0;
  while (gap(hi) > 0) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > kMaxDoublings) {
      throw EvaluationError("reservation price bracket did not close; premium has no effect?");
    }
  }

  double mid = lo;
  double g = g1;
  for (out.iterations = 0; out.iterations < kMaxBisections; ++out.iterations) {
    mid = 0.5 * (lo + hi);
    g = gap(mid);
    if (std::abs(g) < tolerance) break;
    if (g > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.multiplier = mid;
  out.premium_eur = mid * baseline_premium_eur;
  out.insured_eu = g + out.alternative_eu;
  return out;
}

ReservationResult insurance_reservation_price(const DecisionModel& model,
                                              const casestudy::DecisionPair& pair,
                                              const SolverBudgets& budgets,
                                              const stoch::RngStream& rng,
                                              const Execution& exec) {
  if (pair.insurance == casestudy::InsurancePlan::none) {
    throw ArgumentError("reservation price needs an insurance product");
  }
  const casestudy::DecisionPair alternative{pair.portfolio, casestudy::InsurancePlan::none};
  const std::vector<casestudy::DecisionPair> pairs{pair, alternative};
  const AttackPolicyTable table = model.attack_table(budgets, rng.derive(kAttackPhase), exec);

  return reservation_price(
      [&](double m) { return model.defender_problem(pairs, m); }, table, model.premium(pair),
      budgets.n_samples, rng.derive(kDefendPhase), 1e-4, exec);
}

}  // namespace ara::analysis
