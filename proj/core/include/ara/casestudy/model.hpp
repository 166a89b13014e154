#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ara/casestudy/attacker.hpp"
#include "ara/casestudy/defender.hpp"
#include "ara/core/attacker_solver.hpp"
#include "ara/core/dad_solver.hpp"
#include "ara/core/defender_solver.hpp"
#include "ara/core/problem.hpp"

namespace ara::casestudy {

struct CaseStudyParams {
  DefenderParams defender;
  AttackerParams attacker;

  void validate() const;
  bool operator==(const CaseStudyParams&) const = default;
};

CaseStudyParams default_case_study();

using CaseAttackerProblem = AttackerProblem<DdosTier, AttackerHyperDraw>;

/// Attack-table label of a tier ("1 tbps", ..., "none").
std::string defence_label(DdosTier tier);

/// The attacker only observes the DDoS tier. Rows in report order:
/// 1 tbps, 10 gbps, 5 gbps, 2 gbps, none.
std::vector<Labelled<DdosTier>> attacker_defences();

std::vector<int> attack_space(const AttackerParams& p);

CaseAttackerProblem make_attacker_problem(const CaseStudyParams& params);

/// Defender problem over `decisions`; premiums are multiplied by
/// `premium_multiplier` on top of the configured premium scale.
DefenderProblem make_defender_problem(const CaseStudyParams& params,
                                      std::span<const DecisionPair> decisions,
                                      double premium_multiplier = 1.0);

/// Algorithm-1 attack table for the five DDoS tiers.
AttackPolicyTable solve_attack_table(const CaseStudyParams& params, std::int64_t k_draws,
                                     std::int64_t m_inner, const stoch::RngStream& rng,
                                     const Execution& exec = {});

// Preventive controls are those the attacker can observe or that precede the
// attack; procedures and insurance are treated as reactive.
struct PreventiveControls {
  bool anti_fire = false;
  bool firewall = false;
  DdosTier ddos = DdosTier::none;
};
struct ReactiveControls {
  bool procedures = false;
  InsurancePlan insurance = InsurancePlan::none;
};

DadProblem<PreventiveControls, ReactiveControls> make_dad_problem(const CaseStudyParams& params);
AttackerProblem<PreventiveControls, AttackerHyperDraw> make_dad_attacker_problem(
    const CaseStudyParams& params);

}  // namespace ara::casestudy
