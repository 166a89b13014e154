#include "ara/casestudy/model.hpp"

#include "ara/errors.hpp"

namespace ara::casestudy {

void CaseStudyParams::validate() const {
  defender.validate();
  attacker.validate();
}

CaseStudyParams default_case_study() {
  return {default_defender_params(), default_attacker_params()};
}

std::string defence_label(DdosTier tier) { return to_string(tier); }

std::vector<Labelled<DdosTier>> attacker_defences() {
  std::vector<Labelled<DdosTier>> out;
  for (DdosTier tier : {DdosTier::tbps1, DdosTier::gbps10, DdosTier::gbps5, DdosTier::gbps2,
                        DdosTier::none}) {
    out.push_back({defence_label(tier), tier});
  }
  return out;
}

std::vector<int> attack_space(const AttackerParams& p) {
  std::vector<int> out(static_cast<std::size_t>(p.max_attacks) + 1);
  for (int a = 0; a <= p.max_attacks; ++a) out[static_cast<std::size_t>(a)] = a;
  return out;
}

CaseAttackerProblem make_attacker_problem(const CaseStudyParams& params) {
  params.validate();
  CaseAttackerProblem problem;
  problem.attack_space = attack_space(params.attacker);
  problem.hyper_model = [a = params.attacker](stoch::RngStream& rng) {
    return draw_attacker_hyper(a, rng);
  };
  problem.payoff_sampler = [d = params.defender, a = params.attacker](
                               int attacks, const DdosTier& tier, const AttackerHyperDraw& hyper,
                               stoch::RngStream& rng) {
    return sample_attacker(attacks, ddos_capacity_gbps(tier, d), hyper, a, rng).result_eur;
  };
  problem.random_utility = [a = params.attacker](double payoff, const AttackerHyperDraw& hyper) {
    return attacker_utility(payoff, hyper.risk_exponent, a);
  };
  return problem;
}

DefenderProblem make_defender_problem(const CaseStudyParams& params,
                                      std::span<const DecisionPair> decisions,
                                      double premium_multiplier) {
  params.validate();
  if (!(premium_multiplier >= 0)) throw ArgumentError("premium multiplier must be >= 0");

  DefenderParams d = params.defender;
  d.premium_scale *= premium_multiplier;

  DefenderProblem problem;
  std::vector<DecisionPair> pairs(decisions.begin(), decisions.end());
  for (const auto& pair : pairs) {
    problem.decisions.push_back({pair.label(), defence_label(pair.portfolio.ddos),
                                 portfolio_cost(pair.portfolio, d) +
                                     insurance_premium(pair.insurance, pair.portfolio, d)});
  }
  const std::vector<int> space = attack_space(params.attacker);
  problem.cost_sampler = [pairs, d, space](std::size_t decision, std::span<const double> row,
                                           stoch::RngStream& rng) {
    if (!row.empty() && row.size() != space.size()) {
      throw ConfigurationError("attack row width does not match the attack space");
    }
    const auto& pair = pairs[decision];
    return sample_defender(pair.portfolio, pair.insurance, row, space, d, rng).total_cost_eur;
  };
  problem.utility = [d](double cost) { return defender_utility(cost, d); };
  problem.baseline_cost = d.baseline_cost_eur;
  return problem;
}

AttackPolicyTable solve_attack_table(const CaseStudyParams& params, std::int64_t k_draws,
                                     std::int64_t m_inner, const stoch::RngStream& rng,
                                     const Execution& exec) {
  return solve_attacker_distribution(make_attacker_problem(params), attacker_defences(), k_draws,
                                     m_inner, rng, exec);
}

namespace {

ControlPortfolio combine(const PreventiveControls& p, const ReactiveControls& r) {
  return {p.anti_fire, p.firewall, r.procedures, p.ddos};
}

std::string preventive_label(const PreventiveControls& p) {
  std::string out = p.anti_fire ? "anti-fire" : "no anti-fire";
  out += p.firewall ? ", firewall, " : ", no firewall, ";
  out += p.ddos == DdosTier::none ? "no protection" : to_string(p.ddos);
  return out;
}

std::string reactive_label(const ReactiveControls& r) {
  return std::string(r.procedures ? "procedure, " : "no procedure, ") + to_string(r.insurance);
}

}  // namespace

DadProblem<PreventiveControls, ReactiveControls> make_dad_problem(const CaseStudyParams& params) {
  params.validate();
  DadProblem<PreventiveControls, ReactiveControls> problem;
  for (bool anti_fire : {false, true}) {
    for (bool firewall : {false, true}) {
      for (DdosTier tier : kDdosTiers) {
        PreventiveControls p{anti_fire, firewall, tier};
        problem.preventive.push_back({preventive_label(p), p});
      }
    }
  }
  for (bool procedures : {false, true}) {
    for (InsurancePlan plan : kInsurancePlans) {
      ReactiveControls r{procedures, plan};
      problem.reactive.push_back({reactive_label(r), r});
    }
  }
  const DefenderParams d = params.defender;
  const std::vector<int> space = attack_space(params.attacker);
  problem.cost_sampler = [d, space](const PreventiveControls& p, const ReactiveControls& r,
                                    std::span<const double> row, stoch::RngStream& rng) {
    return sample_defender(combine(p, r), r.insurance, row, space, d, rng).total_cost_eur;
  };
  problem.utility = [d](double cost) { return defender_utility(cost, d); };
  problem.baseline_cost = d.baseline_cost_eur;
  problem.upfront_cost = [d](const PreventiveControls& p, const ReactiveControls& r) {
    const ControlPortfolio s = combine(p, r);
    return portfolio_cost(s, d) + insurance_premium(r.insurance, s, d);
  };
  return problem;
}

AttackerProblem<PreventiveControls, AttackerHyperDraw> make_dad_attacker_problem(
    const CaseStudyParams& params) {
  const CaseAttackerProblem base = make_attacker_problem(params);
  AttackerProblem<PreventiveControls, AttackerHyperDraw> problem;
  problem.attack_space = base.attack_space;
  problem.hyper_model = base.hyper_model;
  problem.random_utility = base.random_utility;
  problem.payoff_sampler = [inner = base.payoff_sampler](int attacks, const PreventiveControls& p,
                                                         const AttackerHyperDraw& hyper,
                                                         stoch::RngStream& rng) {
    return inner(attacks, p.ddos, hyper, rng);
  };
  return problem;
}

}  // namespace ara::casestudy
