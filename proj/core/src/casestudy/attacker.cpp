#include "ara/casestudy/attacker.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "ara/errors.hpp"

namespace ara::casestudy {

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ParameterDomainError(field, what);
}

template <class Spec>
void validate_field(const Spec& spec, const char* field) {
  try {
    stoch::validate(spec);
  } catch (const Error& e) {
    throw ParameterDomainError(field, e.what());
  }
}

stoch::Gamma as_gamma(const stoch::DistSpec& spec) {
  if (const auto* g = std::get_if<stoch::Gamma>(&spec)) return *g;
  throw ConfigurationError("attacker hyper-spec must produce a gamma distribution");
}

enum NodeStream : std::uint64_t { kCampaign = 1, kDetection };

}  // namespace

void AttackerParams::validate() const {
  require(max_attacks >= 0, "max_attacks", "must be >= 0");
  require(std::isfinite(attack_cost_eur) && attack_cost_eur >= 0, "attack_cost_eur",
          "must be >= 0");
  require(attack_length_hours.family == stoch::DistKind::gamma, "attack_length_hours",
          "family must be gamma");
  require(attack_peak_gbps.family == stoch::DistKind::gamma, "attack_peak_gbps",
          "family must be gamma");
  validate_field(attack_length_hours, "attack_length_hours");
  validate_field(attack_peak_gbps, "attack_peak_gbps");
  validate_field(stoch::DistSpec{loss_rate_lo_prior}, "loss_rate_lo_prior");
  validate_field(stoch::DistSpec{loss_rate_hi_prior}, "loss_rate_hi_prior");
  require(loss_rate_lo_prior.lo >= 0, "loss_rate_lo_prior", "must be >= 0");
  require(loss_rate_lo_prior.hi < loss_rate_hi_prior.lo, "loss_rate_hi_prior",
          "must lie above loss_rate_lo_prior");
  validate_field(stoch::DistSpec{detection_prob_prior}, "detection_prob_prior");
  validate_field(stoch::DistSpec{risk_exponent_prior}, "risk_exponent_prior");
  require(risk_exponent_prior.lo > 0, "risk_exponent_prior", "must be > 0");
  validate_field(stoch::DistSpec{detection_cost_eur}, "detection_cost_eur");
  require(detection_cost_eur.mean >= 0, "detection_cost_eur", "mean must be >= 0");
  require(std::isfinite(eur_per_share_point) && eur_per_share_point >= 0, "eur_per_share_point",
          "must be >= 0");
  require(std::isfinite(market_loss_cap_eur) && market_loss_cap_eur >= 0, "market_loss_cap_eur",
          "must be >= 0");
  require(std::isfinite(utility_floor_eur), "utility_floor_eur", "must be finite");
  require(std::isfinite(utility_ceiling_eur) && utility_ceiling_eur > utility_floor_eur,
          "utility_ceiling_eur", "must exceed utility_floor_eur");
}

AttackerParams default_attacker_params() {
  using stoch::DistKind;
  using stoch::Uniform;
  AttackerParams p{};
  p.max_attacks = 30;
  p.attack_cost_eur = 33.0 * 24.0;  // one day of botnet rental

  p.attack_length_hours = {DistKind::gamma, {{"shape", Uniform{3.6, 4.8}}, {"rate", Uniform{0.8, 1.2}}}};
  p.attack_peak_gbps = {DistKind::gamma, {{"shape", Uniform{4.8, 5.6}}, {"rate", Uniform{0.8, 1.2}}}};
  p.loss_rate_lo_prior = {0.0021, 0.0031};
  p.loss_rate_hi_prior = {0.00367, 0.00467};
  p.detection_prob_prior = {2, 998};
  p.risk_exponent_prior = {8, 10};

  p.detection_cost_eur = {2'430'000, 400'000};
  p.eur_per_share_point = 3'000'000;
  p.market_loss_cap_eur = 1'500'000;

  // Ceiling: the whole market share. Floor: detection cost mean + 4 sd plus
  // thirty attacks, rounded.
  p.utility_floor_eur = -4'100'000;
  p.utility_ceiling_eur = 1'500'000;
  return p;
}

AttackerHyperDraw draw_attacker_hyper(const AttackerParams& p, stoch::RngStream& rng) {
  AttackerHyperDraw h{};
  h.attack_length_hours = as_gamma(stoch::draw_hyper(p.attack_length_hours, rng));
  h.attack_peak_gbps = as_gamma(stoch::draw_hyper(p.attack_peak_gbps, rng));
  h.loss_rate_lo = stoch::sample_uniform(p.loss_rate_lo_prior.lo, p.loss_rate_lo_prior.hi, rng);
  h.loss_rate_hi = stoch::sample_uniform(p.loss_rate_hi_prior.lo, p.loss_rate_hi_prior.hi, rng);
  h.detection_prob = stoch::sample_beta(p.detection_prob_prior.a, p.detection_prob_prior.b, rng);
  h.risk_exponent = stoch::sample_uniform(p.risk_exponent_prior.lo, p.risk_exponent_prior.hi, rng);
  return h;
}

Campaign sample_campaign(int attacks, double capacity_gbps, const AttackerHyperDraw& hyper,
                         const AttackerParams& p, stoch::RngStream& rng) {
  Campaign out;
  if (attacks <= 0) return out;
  const auto& peak = hyper.attack_peak_gbps;
  const auto& length = hyper.attack_length_hours;
  for (int j = 0; j < attacks; ++j) {
    const double peak_gbps = stoch::sample_gamma(peak.shape, peak.rate, rng);
    const double hours = stoch::sample_gamma(length.shape, length.rate, rng);
    if (peak_gbps > capacity_gbps) out.outage_hours += hours;
  }
  const double rate = stoch::sample_uniform(hyper.loss_rate_lo, hyper.loss_rate_hi, rng);
  out.market_loss_eur =
      std::min(p.market_loss_cap_eur, p.eur_per_share_point * out.outage_hours * rate);
  return out;
}

Detection sample_detection_and_cost(int attacks, const AttackerHyperDraw& hyper,
                                    const AttackerParams& p, stoch::RngStream& rng) {
  Detection out;
  if (attacks <= 0) return out;
  out.detected = stoch::sample_binomial(attacks, hyper.detection_prob, rng) > 0;
  if (out.detected) {
    // Truncated normal by rejection; the mass below zero is ~1e-9.
    do {
      out.cost_eur = stoch::sample_normal(p.detection_cost_eur.mean, p.detection_cost_eur.sd, rng);
    } while (out.cost_eur < 0.0);
  }
  return out;
}

double attack_result(double earnings_eur, double detection_cost_eur, int attacks,
                     const AttackerParams& p) noexcept {
  return earnings_eur - detection_cost_eur - p.attack_cost_eur * attacks;
}

double attacker_utility(double result_eur, double risk_exponent, const AttackerParams& p) {
  const double span = p.utility_ceiling_eur - p.utility_floor_eur;
  const double normalised = std::clamp((result_eur - p.utility_floor_eur) / span, 0.0, 1.0);
  return std::pow(normalised, risk_exponent);
}

AttackerSample sample_attacker(int attacks, double capacity_gbps, const AttackerHyperDraw& hyper,
                               const AttackerParams& p, stoch::RngStream& rng) {
  stoch::RngStream campaign_rng = rng.derive(kCampaign);
  stoch::RngStream detection_rng = rng.derive(kDetection);

  AttackerSample out;
  out.campaign = sample_campaign(attacks, capacity_gbps, hyper, p, campaign_rng);
  out.earnings_eur = out.campaign.market_loss_eur;
  out.detection = sample_detection_and_cost(attacks, hyper, p, detection_rng);
  out.result_eur = attack_result(out.earnings_eur, out.detection.cost_eur, attacks, p);
  return out;
}

}  // namespace ara::casestudy
