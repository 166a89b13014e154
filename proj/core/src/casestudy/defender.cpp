#include "ara/casestudy/defender.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ara/errors.hpp"

namespace ara::casestudy {

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ParameterDomainError(field, what);
}

bool non_negative(double x) { return std::isfinite(x) && x >= 0; }
bool probability(double x) { return std::isfinite(x) && x >= 0 && x <= 1; }

double premium_part(const PremiumRow& row, const ControlPortfolio& s) {
  double price = INFINITY;
  if (s.anti_fire) price = std::min(price, row.anti_fire_eur);
  if (s.firewall || s.ddos != DdosTier::none) price = std::min(price, row.firewall_or_ddos_eur);
  if (s.procedures) price = std::min(price, row.procedures_eur);
  return std::isfinite(price) ? price : row.none_eur;
}

// Fraction of facilities and computers destroyed by a fire of `minutes`.
double fire_damage_fraction(double minutes, const DefenderParams& p) {
  return std::min(1.0, minutes / p.full_damage_fire_minutes);
}

}  // namespace

const char* to_string(DdosTier tier) noexcept {
  switch (tier) {
    case DdosTier::none: return "none";
    case DdosTier::gbps2: return "2 gbps";
    case DdosTier::gbps5: return "5 gbps";
    case DdosTier::gbps10: return "10 gbps";
    case DdosTier::tbps1: return "1 tbps";
  }
  return "?";
}

const char* to_string(InsurancePlan plan) noexcept {
  switch (plan) {
    case InsurancePlan::none: return "no insurance";
    case InsurancePlan::traditional: return "traditional";
    case InsurancePlan::cyber: return "cyber";
    case InsurancePlan::comprehensive: return "comprehensive";
  }
  return "?";
}

std::string ControlPortfolio::label() const {
  std::string out = anti_fire ? "anti-fire" : "no anti-fire";
  out += firewall ? ", firewall" : ", no firewall";
  out += procedures ? ", procedure" : ", no procedure";
  out += ", ";
  out += ddos == DdosTier::none ? "no protection" : to_string(ddos);
  return out;
}

std::string DecisionPair::label() const {
  return portfolio.label() + ", " + to_string(insurance);
}

std::vector<ControlPortfolio> all_portfolios() {
  std::vector<ControlPortfolio> out;
  for (bool anti_fire : {false, true}) {
    for (bool firewall : {false, true}) {
      for (bool procedures : {false, true}) {
        for (DdosTier tier : kDdosTiers) out.push_back({anti_fire, firewall, procedures, tier});
      }
    }
  }
  return out;
}

std::vector<DecisionPair> all_decision_pairs() {
  std::vector<DecisionPair> out;
  for (const auto& s : all_portfolios()) {
    for (InsurancePlan i : kInsurancePlans) out.push_back({s, i});
  }
  return out;
}

void DefenderParams::validate() const {
  require(non_negative(facility_value_eur), "facility_value_eur", "must be >= 0");
  require(non_negative(computer_value_eur), "computer_value_eur", "must be >= 0");
  require(non_negative(market_share_value_eur), "market_share_value_eur", "must be >= 0");
  require(non_negative(anti_fire_cost_eur), "anti_fire_cost_eur", "must be >= 0");
  require(non_negative(firewall_cost_eur), "firewall_cost_eur", "must be >= 0");
  require(non_negative(procedures_cost_eur), "procedures_cost_eur", "must be >= 0");
  for (const auto& tier : ddos_tiers) {
    require(std::isfinite(tier.capacity_gbps) && tier.capacity_gbps > 0,
            "ddos_tiers.capacity_gbps", "must be > 0");
    require(non_negative(tier.cost_eur), "ddos_tiers.cost_eur", "must be >= 0");
  }
  for (const PremiumRow* row : {&traditional_premium, &cyber_premium}) {
    require(non_negative(row->none_eur) && non_negative(row->anti_fire_eur) &&
                non_negative(row->firewall_or_ddos_eur) && non_negative(row->procedures_eur),
            row == &traditional_premium ? "traditional_premium" : "cyber_premium",
            "premiums must be >= 0");
  }
  require(non_negative(comprehensive_discount_eur), "comprehensive_discount_eur", "must be >= 0");
  require(non_negative(premium_scale), "premium_scale", "must be >= 0");
  require(probability(coverage_fraction), "coverage_fraction", "must lie in [0, 1]");

  require(non_negative(fire_rate_per_year), "fire_rate_per_year", "must be >= 0");
  try {
    stoch::validate(fire_duration_minutes);
  } catch (const ParameterDomainError& e) {
    throw ParameterDomainError("fire_duration_minutes", e.what());
  }
  try {
    stoch::validate(fire_duration_anti_fire_minutes);
  } catch (const ParameterDomainError& e) {
    throw ParameterDomainError("fire_duration_anti_fire_minutes", e.what());
  }
  require(std::isfinite(full_damage_fire_minutes) && full_damage_fire_minutes > 0,
          "full_damage_fire_minutes", "must be > 0");

  require(virus_exposures_per_year >= 0, "virus_exposures_per_year", "must be >= 0");
  require(probability(virus_infection_rates.firewall_and_procedures),
          "virus_infection_rates.firewall_and_procedures", "must lie in [0, 1]");
  require(probability(virus_infection_rates.firewall_only), "virus_infection_rates.firewall_only",
          "must lie in [0, 1]");
  require(probability(virus_infection_rates.procedures_only),
          "virus_infection_rates.procedures_only", "must lie in [0, 1]");
  require(probability(virus_infection_rates.neither), "virus_infection_rates.neither",
          "must lie in [0, 1]");
  require(non_negative(virus_repair_cost_eur), "virus_repair_cost_eur", "must be >= 0");
  require(non_negative(virus_lost_time_cost_eur), "virus_lost_time_cost_eur", "must be >= 0");
  require(probability(virus_lost_time_fraction_max), "virus_lost_time_fraction_max",
          "must lie in [0, 1]");

  try {
    stoch::validate(ddos_attack_length_hours);
  } catch (const ParameterDomainError& e) {
    throw ParameterDomainError("ddos_attack_length_hours", e.what());
  }
  try {
    stoch::validate(ddos_attack_peak_gbps);
  } catch (const ParameterDomainError& e) {
    throw ParameterDomainError("ddos_attack_peak_gbps", e.what());
  }
  require(non_negative(market_loss_rate_lo_share_per_hour), "market_loss_rate_lo_share_per_hour",
          "must be >= 0");
  require(std::isfinite(market_loss_rate_hi_share_per_hour) &&
              market_loss_rate_hi_share_per_hour >= market_loss_rate_lo_share_per_hour,
          "market_loss_rate_hi_share_per_hour", "must be >= the low rate");
  require(non_negative(eur_per_share_point), "eur_per_share_point", "must be >= 0");
  require(std::isfinite(utility_max_cost_eur) && utility_max_cost_eur > 0, "utility_max_cost_eur",
          "must be > 0");
  require(non_negative(baseline_cost_eur), "baseline_cost_eur", "must be >= 0");
}

DefenderParams default_defender_params() {
  DefenderParams p{};
  p.facility_value_eur = 5'000'000;
  p.computer_value_eur = 200'000;
  p.market_share_value_eur = 1'500'000;

  p.anti_fire_cost_eur = 1'500;
  p.firewall_cost_eur = 2'250;
  p.procedures_cost_eur = 2'000;
  p.ddos_tiers = {{{2, 2'400}, {5, 3'600}, {10, 4'800}, {1'000, 12'000}}};

  p.traditional_premium = {500, 300, 500, 500};
  p.cyber_premium = {300, 300, 200, 250};
  p.comprehensive_discount_eur = 100;
  p.premium_scale = 1.0;
  p.coverage_fraction = 0.8;

  p.fire_rate_per_year = 0.022;
  p.fire_duration_minutes = {0.85, 0.01089};
  p.fire_duration_anti_fire_minutes = stoch::triangular_from_min_max_mode(0.8, 63, 10);
  p.full_damage_fire_minutes = 120;

  p.virus_exposures_per_year = 12 * 90;
  p.virus_infection_rates = {0.0025, 0.005, 0.1666, 0.33};
  p.virus_repair_cost_eur = 31;
  p.virus_lost_time_cost_eur = 20.0 * 28.0;
  p.virus_lost_time_fraction_max = 0.05;

  p.ddos_attack_length_hours = {4, 1};
  p.ddos_attack_peak_gbps = {5, 1};
  p.market_loss_rate_lo_share_per_hour = 0.0026;
  p.market_loss_rate_hi_share_per_hour = 0.00417;
  // 0.5 market-share points are worth the whole EUR 1,500,000.
  p.eur_per_share_point = 3'000'000;

  p.utility_max_cost_eur = 7'000'000;
  p.baseline_cost_eur = 0;
  return p;
}

double ddos_capacity_gbps(DdosTier tier, const DefenderParams& p) {
  if (tier == DdosTier::none) return 0.0;
  return p.ddos_tiers[static_cast<std::size_t>(tier) - 1].capacity_gbps;
}

double portfolio_cost(const ControlPortfolio& s, const DefenderParams& p) {
  double cost = 0.0;
  if (s.anti_fire) cost += p.anti_fire_cost_eur;
  if (s.firewall) cost += p.firewall_cost_eur;
  if (s.procedures) cost += p.procedures_cost_eur;
  if (s.ddos != DdosTier::none) cost += p.ddos_tiers[static_cast<std::size_t>(s.ddos) - 1].cost_eur;
  return cost;
}

double insurance_premium(InsurancePlan i, const ControlPortfolio& s, const DefenderParams& p) {
  double premium = 0.0;
  switch (i) {
    case InsurancePlan::none: return 0.0;
    case InsurancePlan::traditional: premium = premium_part(p.traditional_premium, s); break;
    case InsurancePlan::cyber: premium = premium_part(p.cyber_premium, s); break;
    case InsurancePlan::comprehensive:
      premium = premium_part(p.traditional_premium, s) + premium_part(p.cyber_premium, s) -
                p.comprehensive_discount_eur;
      break;
  }
  return p.premium_scale * premium;
}

double virus_infection_probability(const ControlPortfolio& s, const DefenderParams& p) {
  const auto& q = p.virus_infection_rates;
  if (s.firewall && s.procedures) return q.firewall_and_procedures;
  if (s.firewall) return q.firewall_only;
  if (s.procedures) return q.procedures_only;
  return q.neither;
}

FireSample sample_fire(const ControlPortfolio& s, const DefenderParams& p, stoch::RngStream& rng) {
  FireSample out;
  out.fires = stoch::sample_capped_poisson(p.fire_rate_per_year, rng);
  if (out.fires == 0) return out;
  if (s.anti_fire) {
    const auto& t = p.fire_duration_anti_fire_minutes;
    out.duration_min = stoch::sample_triangular(t.min, t.mode, t.max, rng);
  } else {
    const auto& g = p.fire_duration_minutes;
    out.duration_min = stoch::sample_gamma(g.shape, g.rate, rng);
  }
  return out;
}

std::int64_t sample_virus_count(const ControlPortfolio& s, const DefenderParams& p,
                                stoch::RngStream& rng) {
  return stoch::sample_binomial(p.virus_exposures_per_year, virus_infection_probability(s, p), rng);
}

double sample_ddos_outage(int attacks, const ControlPortfolio& s, const DefenderParams& p,
                          stoch::RngStream& rng) {
  const double capacity = ddos_capacity_gbps(s.ddos, p);
  const auto& peak = p.ddos_attack_peak_gbps;
  const auto& length = p.ddos_attack_length_hours;
  double total = 0.0;
  for (int j = 0; j < attacks; ++j) {
    // Both variates are always drawn so that tiers share random numbers.
    const double peak_gbps = stoch::sample_gamma(peak.shape, peak.rate, rng);
    const double hours = stoch::sample_gamma(length.shape, length.rate, rng);
    if (peak_gbps > capacity) total += hours;
  }
  return total;
}

Impacts compute_impacts(double duration_min, std::int64_t infections, double outage_hours,
                        const DefenderParams& p, stoch::RngStream& rng) {
  const double fraction = fire_damage_fraction(duration_min, p);
  const double v = static_cast<double>(infections);
  const double lost_time = stoch::sample_uniform(0.0, p.virus_lost_time_fraction_max, rng);
  const double loss_rate = stoch::sample_uniform(p.market_loss_rate_lo_share_per_hour,
                                                 p.market_loss_rate_hi_share_per_hour, rng);
  Impacts out;
  out.facility_loss_eur = p.facility_value_eur * fraction;
  out.fire_computer_eur = p.computer_value_eur * fraction;
  out.virus_repair_eur = p.virus_repair_cost_eur * v;
  out.non_insurable_eur = p.virus_lost_time_cost_eur * v * lost_time;
  out.market_loss_eur =
      std::min(p.market_share_value_eur, p.eur_per_share_point * outage_hours * loss_rate);
  return out;
}

double insurance_coverage(InsurancePlan i, double facility_loss_eur, double fire_computer_eur,
                          double virus_repair_eur, const DefenderParams& p) {
  switch (i) {
    case InsurancePlan::none: return 0.0;
    case InsurancePlan::traditional:
      return p.coverage_fraction * (facility_loss_eur + fire_computer_eur);
    case InsurancePlan::cyber: return p.coverage_fraction * virus_repair_eur;
    case InsurancePlan::comprehensive:
      return p.coverage_fraction * (facility_loss_eur + fire_computer_eur + virus_repair_eur);
  }
  return 0.0;
}

double defender_utility(double cost_eur, const DefenderParams& p) {
  if (!std::isfinite(cost_eur)) throw EvaluationError("defender utility of a non-finite cost");
  constexpr double e = std::numbers::e;
  const double u = (std::exp(1.0 - cost_eur / p.utility_max_cost_eur) - 1.0) / (e - 1.0);
  return std::clamp(u, 0.0, 1.0);
}

int sample_attack(std::span<const double> row, std::span<const int> attack_space,
                  stoch::RngStream& rng) {
  if (row.empty()) return 0;
  const double u = rng.uniform01();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] <= 0.0) continue;
    last_positive = k;
    cumulative += row[k];
    if (u < cumulative) return attack_space[k];
  }
  return attack_space[last_positive];
}

namespace {

// Per-node sub-streams of one defender sample.
enum NodeStream : std::uint64_t { kFire = 1, kVirus, kAttack, kDdos, kImpacts };

constexpr std::array<int, 31> kDefaultAttackSpace = [] {
  std::array<int, 31> a{};
  for (int k = 0; k < 31; ++k) a[static_cast<std::size_t>(k)] = k;
  return a;
}();

}  // namespace

DefenderSample sample_defender(const ControlPortfolio& s, InsurancePlan i,
                               std::span<const double> attack_row,
                               std::span<const int> attack_space, const DefenderParams& p,
                               stoch::RngStream& rng) {
  stoch::RngStream fire_rng = rng.derive(kFire);
  stoch::RngStream virus_rng = rng.derive(kVirus);
  stoch::RngStream attack_rng = rng.derive(kAttack);
  stoch::RngStream ddos_rng = rng.derive(kDdos);
  stoch::RngStream impact_rng = rng.derive(kImpacts);

  DefenderSample out;
  out.fire = sample_fire(s, p, fire_rng);
  out.infections = sample_virus_count(s, p, virus_rng);
  out.attacks = sample_attack(attack_row, attack_space, attack_rng);
  out.outage_hours = sample_ddos_outage(out.attacks, s, p, ddos_rng);
  out.impacts = compute_impacts(out.fire.duration_min, out.infections, out.outage_hours, p,
                                impact_rng);
  out.control_cost_eur = portfolio_cost(s, p);
  out.premium_eur = insurance_premium(i, s, p);
  out.coverage_eur = insurance_coverage(i, out.impacts.facility_loss_eur,
                                        out.impacts.fire_computer_eur,
                                        out.impacts.virus_repair_eur, p);
  const Impacts& m = out.impacts;
  out.total_cost_eur = m.market_loss_eur + m.facility_loss_eur + m.insurable_eur() +
                       m.non_insurable_eur + out.control_cost_eur + out.premium_eur -
                       out.coverage_eur;
  return out;
}

double sample_total_cost(const ControlPortfolio& s, InsurancePlan i,
                         std::span<const double> attack_row, const DefenderParams& p,
                         stoch::RngStream& rng) {
  if (attack_row.size() > kDefaultAttackSpace.size()) {
    throw ArgumentError("attack row longer than the 0..30 attack space");
  }
  return sample_defender(s, i, attack_row,
                         std::span<const int>(kDefaultAttackSpace.data(), attack_row.size()), p,
                         rng)
      .total_cost_eur;
}

}  // namespace ara::casestudy
