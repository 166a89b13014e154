#include "ara/analysis/decision_model.hpp"

#include <functional>

#include "ara/analysis/constraints.hpp"
#include "ara/errors.hpp"

namespace ara::analysis {

namespace {

using casestudy::CaseStudyParams;

struct Knob {
  const char* label;
  bool attacker_side;
  std::function<double&(CaseStudyParams&)> field;
};

const std::vector<Knob>& knobs() {
  static const std::vector<Knob> table = {
      {"fire_rate_per_year", false,
       [](CaseStudyParams& p) -> double& { return p.defender.fire_rate_per_year; }},
      {"virus_rate.firewall_and_procedures", false,
       [](CaseStudyParams& p) -> double& {
         return p.defender.virus_infection_rates.firewall_and_procedures;
       }},
      {"virus_rate.firewall_only", false,
       [](CaseStudyParams& p) -> double& { return p.defender.virus_infection_rates.firewall_only; }},
      {"virus_rate.procedures_only", false,
       [](CaseStudyParams& p) -> double& {
         return p.defender.virus_infection_rates.procedures_only;
       }},
      {"virus_rate.neither", false,
       [](CaseStudyParams& p) -> double& { return p.defender.virus_infection_rates.neither; }},
      {"market_loss_rate_lo_share_per_hour", false,
       [](CaseStudyParams& p) -> double& { return p.defender.market_loss_rate_lo_share_per_hour; }},
      {"market_loss_rate_hi_share_per_hour", false,
       [](CaseStudyParams& p) -> double& { return p.defender.market_loss_rate_hi_share_per_hour; }},
      {"premium_scale", false,
       [](CaseStudyParams& p) -> double& { return p.defender.premium_scale; }},
      {"detection_cost_mean_eur", true,
       [](CaseStudyParams& p) -> double& { return p.attacker.detection_cost_eur.mean; }},
      {"attacker_loss_rate_lo_min", true,
       [](CaseStudyParams& p) -> double& { return p.attacker.loss_rate_lo_prior.lo; }},
      {"attacker_loss_rate_lo_max", true,
       [](CaseStudyParams& p) -> double& { return p.attacker.loss_rate_lo_prior.hi; }},
      {"attacker_loss_rate_hi_min", true,
       [](CaseStudyParams& p) -> double& { return p.attacker.loss_rate_hi_prior.lo; }},
      {"attacker_loss_rate_hi_max", true,
       [](CaseStudyParams& p) -> double& { return p.attacker.loss_rate_hi_prior.hi; }},
      {"attacker_utility_floor_eur", true,
       [](CaseStudyParams& p) -> double& { return p.attacker.utility_floor_eur; }},
      {"attacker_utility_ceiling_eur", true,
       [](CaseStudyParams& p) -> double& { return p.attacker.utility_ceiling_eur; }},
  };
  return table;
}

// eur_per_share_point is shared by both agents and handled separately.
constexpr std::string_view kSharePointKnob = "eur_per_share_point";

const Knob* find_knob(std::string_view label) {
  for (const auto& k : knobs()) {
    if (label == k.label) return &k;
  }
  return nullptr;
}

[[noreturn]] void unknown_parameter(std::string_view label,
                                    const std::vector<std::string>& valid) {
  std::string msg = "unknown sensitivity parameter '" + std::string(label) + "'; valid:";
  for (const auto& v : valid) msg += " " + v;
  throw ConfigurationError(msg);
}

}  // namespace

CaseStudyModel::CaseStudyModel(casestudy::CaseStudyParams params) : params_(std::move(params)) {
  params_.validate();
}

std::vector<casestudy::DecisionPair> CaseStudyModel::decisions() const {
  return casestudy::all_decision_pairs();
}

double CaseStudyModel::upfront_cost(const casestudy::DecisionPair& pair) const {
  return analysis::upfront_cost(pair, params_.defender);
}

double CaseStudyModel::premium(const casestudy::DecisionPair& pair) const {
  return casestudy::insurance_premium(pair.insurance, pair.portfolio, params_.defender);
}

AttackPolicyTable CaseStudyModel::attack_table(const SolverBudgets& budgets,
                                               const stoch::RngStream& rng,
                                               const Execution& exec) const {
  return casestudy::solve_attack_table(params_, budgets.k_draws, budgets.m_inner, rng, exec);
}

DefenderProblem CaseStudyModel::defender_problem(std::span<const casestudy::DecisionPair> pairs,
                                                 double premium_multiplier) const {
  return casestudy::make_defender_problem(params_, pairs, premium_multiplier);
}

std::vector<std::string> CaseStudyModel::parameter_labels() const {
  std::vector<std::string> out;
  for (const auto& k : knobs()) out.emplace_back(k.label);
  out.emplace_back(kSharePointKnob);
  return out;
}

double CaseStudyModel::parameter(std::string_view label) const {
  if (label == kSharePointKnob) return params_.defender.eur_per_share_point;
  const Knob* knob = find_knob(label);
  if (!knob) unknown_parameter(label, parameter_labels());
  CaseStudyParams copy = params_;
  return knob->field(copy);
}

std::unique_ptr<DecisionModel> CaseStudyModel::with_parameter(std::string_view label,
                                                              double value) const {
  CaseStudyParams copy = params_;
  if (label == kSharePointKnob) {
    copy.defender.eur_per_share_point = value;
    copy.attacker.eur_per_share_point = value;
  } else {
    const Knob* knob = find_knob(label);
    if (!knob) unknown_parameter(label, parameter_labels());
    knob->field(copy) = value;
  }
  return std::make_unique<CaseStudyModel>(std::move(copy));
}

bool CaseStudyModel::is_attacker_parameter(std::string_view label) const {
  if (label == kSharePointKnob) return true;
  const Knob* knob = find_knob(label);
  if (!knob) unknown_parameter(label, parameter_labels());
  return knob->attacker_side;
}

DefenderRanking rank_decisions(const DecisionModel& model, const AttackPolicyTable& table,
                               std::span<const casestudy::DecisionPair> pairs,
                               const SolverBudgets& budgets, const stoch::RngStream& rng,
                               const Execution& exec) {
  return solve_defender(model.defender_problem(pairs), table, budgets.n_samples,
                        rng.derive(kDefendPhase), exec);
}

ModelSolution solve_model(const DecisionModel& model, const SolverBudgets& budgets,
                          const stoch::RngStream& rng, const Execution& exec,
                          std::span<const casestudy::DecisionPair> pairs) {
  ModelSolution out;
  out.pairs = pairs.empty() ? model.decisions()
                            : std::vector<casestudy::DecisionPair>(pairs.begin(), pairs.end());
  out.attack_table = model.attack_table(budgets, rng.derive(kAttackPhase), exec);
  out.ranking = rank_decisions(model, out.attack_table, out.pairs, budgets, rng, exec);
  return out;
}

}  // namespace ara::analysis
