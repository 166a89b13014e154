#pragma once

#include <cstdint>

#include "ara/stochastics/distributions.hpp"
#include "ara/stochastics/hyper.hpp"
#include "ara/stochastics/rng.hpp"

namespace ara::casestudy {

// The defender's beliefs about the DDoS attacker. Every attacker quantity the
// defender is unsure about is given as a prior over its parameters.
struct AttackerParams {
  int max_attacks;  // attack space is {0, ..., max_attacks}
  double attack_cost_eur;

  stoch::HyperSpec attack_length_hours;  // random gamma, hours per attack
  stoch::HyperSpec attack_peak_gbps;     // random gamma, peak traffic
  stoch::Uniform loss_rate_lo_prior;     // alpha, share points per hour
  stoch::Uniform loss_rate_hi_prior;     // beta, share points per hour
  stoch::Beta detection_prob_prior;      // phi, per attack
  stoch::Uniform risk_exponent_prior;    // K_a

  stoch::Normal detection_cost_eur;
  double eur_per_share_point;
  double market_loss_cap_eur;

  // Payoffs are normalised to [0, 1] over [floor, ceiling] before the power
  // utility is applied.
  double utility_floor_eur;
  double utility_ceiling_eur;

  void validate() const;
  bool operator==(const AttackerParams&) const = default;
};

AttackerParams default_attacker_params();

struct AttackerHyperDraw {
  stoch::Gamma attack_length_hours;
  stoch::Gamma attack_peak_gbps;
  double loss_rate_lo;
  double loss_rate_hi;
  double detection_prob;
  double risk_exponent;
};

struct Campaign {
  double outage_hours = 0.0;  // l
  double market_loss_eur = 0.0;  // m
};

struct Detection {
  bool detected = false;     // t
  double cost_eur = 0.0;     // c_t
};

struct AttackerSample {
  Campaign campaign;
  double earnings_eur = 0.0;  // e = m
  Detection detection;
  double result_eur = 0.0;  // c_a
};

AttackerHyperDraw draw_attacker_hyper(const AttackerParams& p, stoch::RngStream& rng);

Campaign sample_campaign(int attacks, double capacity_gbps, const AttackerHyperDraw& hyper,
                         const AttackerParams& p, stoch::RngStream& rng);

/// Detected when Binomial(attacks, phi) > 0; the detection cost is a normal
/// truncated at zero.
Detection sample_detection_and_cost(int attacks, const AttackerHyperDraw& hyper,
                                    const AttackerParams& p, stoch::RngStream& rng);

/// c_a = e - c_t - cost_per_attack * a.
double attack_result(double earnings_eur, double detection_cost_eur, int attacks,
                     const AttackerParams& p) noexcept;

/// (c'_a)^K_a with c'_a the payoff clamped and rescaled to [0, 1].
double attacker_utility(double result_eur, double risk_exponent, const AttackerParams& p);

AttackerSample sample_attacker(int attacks, double capacity_gbps, const AttackerHyperDraw& hyper,
                               const AttackerParams& p, stoch::RngStream& rng);

}  // namespace ara::casestudy
