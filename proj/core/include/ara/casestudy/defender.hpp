#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ara/stochastics/distributions.hpp"
#include "ara/stochastics/rng.hpp"

namespace ara::casestudy {

enum class DdosTier { none, gbps2, gbps5, gbps10, tbps1 };
inline constexpr std::array<DdosTier, 5> kDdosTiers = {DdosTier::none, DdosTier::gbps2,
                                                       DdosTier::gbps5, DdosTier::gbps10,
                                                       DdosTier::tbps1};
const char* to_string(DdosTier tier) noexcept;

struct ControlPortfolio {
  bool anti_fire = false;
  bool firewall = false;
  bool procedures = false;
  DdosTier ddos = DdosTier::none;

  std::string label() const;
  auto operator<=>(const ControlPortfolio&) const = default;
};

enum class InsurancePlan { none, traditional, cyber, comprehensive };
inline constexpr std::array<InsurancePlan, 4> kInsurancePlans = {
    InsurancePlan::none, InsurancePlan::traditional, InsurancePlan::cyber,
    InsurancePlan::comprehensive};
const char* to_string(InsurancePlan plan) noexcept;

struct DecisionPair {
  ControlPortfolio portfolio;
  InsurancePlan insurance = InsurancePlan::none;

  std::string label() const;
  auto operator<=>(const DecisionPair&) const = default;
};

/// The 40 portfolios, anti-fire outermost and DDoS tier innermost.
std::vector<ControlPortfolio> all_portfolios();
/// The 160 (portfolio, insurance) pairs.
std::vector<DecisionPair> all_decision_pairs();

struct DdosTierSpec {
  double capacity_gbps;
  double cost_eur;

  bool operator==(const DdosTierSpec&) const = default;
};

// One row of the premium table: price of a product given which controls are
// present. A row applies the cheapest column whose control is present, and
// the `none` column when no listed control is present.
struct PremiumRow {
  double none_eur;
  double anti_fire_eur;
  double firewall_or_ddos_eur;
  double procedures_eur;

  bool operator==(const PremiumRow&) const = default;
};

// Infection probability per computer-month by (firewall, procedures).
struct VirusInfectionRates {
  double firewall_and_procedures;
  double firewall_only;
  double procedures_only;
  double neither;

  bool operator==(const VirusInfectionRates&) const = default;
};

struct DefenderParams {
  double facility_value_eur;
  double computer_value_eur;
  double market_share_value_eur;

  double anti_fire_cost_eur;
  double firewall_cost_eur;
  double procedures_cost_eur;
  // gbps2, gbps5, gbps10, tbps1
  std::array<DdosTierSpec, 4> ddos_tiers;

  PremiumRow traditional_premium;
  PremiumRow cyber_premium;
  double comprehensive_discount_eur;
  double premium_scale;
  double coverage_fraction;

  double fire_rate_per_year;
  stoch::Gamma fire_duration_minutes;
  stoch::Triangular fire_duration_anti_fire_minutes;
  double full_damage_fire_minutes;

  std::int64_t virus_exposures_per_year;
  VirusInfectionRates virus_infection_rates;
  double virus_repair_cost_eur;
  double virus_lost_time_cost_eur;
  double virus_lost_time_fraction_max;

  stoch::Gamma ddos_attack_length_hours;
  stoch::Gamma ddos_attack_peak_gbps;
  double market_loss_rate_lo_share_per_hour;
  double market_loss_rate_hi_share_per_hour;
  double eur_per_share_point;

  double utility_max_cost_eur;
  double baseline_cost_eur;

  /// Throws ParameterDomainError naming the first invalid field.
  void validate() const;
  bool operator==(const DefenderParams&) const = default;
};

DefenderParams default_defender_params();

struct FireSample {
  std::int64_t fires = 0;     // f in {0, 1}
  double duration_min = 0.0;  // o, 0 when no fire
};

struct Impacts {
  double facility_loss_eur = 0.0;  // b
  double fire_computer_eur = 0.0;  // fire component of q_i
  double virus_repair_eur = 0.0;   // virus component of q_i
  double non_insurable_eur = 0.0;  // q_n
  double market_loss_eur = 0.0;    // m

  double insurable_eur() const noexcept { return fire_computer_eur + virus_repair_eur; }
};

struct DefenderSample {
  FireSample fire;
  std::int64_t infections = 0;  // v
  int attacks = 0;              // a
  double outage_hours = 0.0;    // l
  Impacts impacts;
  double control_cost_eur = 0.0;  // c_s
  double premium_eur = 0.0;       // c_i
  double coverage_eur = 0.0;      // g_i
  double total_cost_eur = 0.0;    // c_d
};

double ddos_capacity_gbps(DdosTier tier, const DefenderParams& p);
double portfolio_cost(const ControlPortfolio& s, const DefenderParams& p);
double insurance_premium(InsurancePlan i, const ControlPortfolio& s, const DefenderParams& p);
double virus_infection_probability(const ControlPortfolio& s, const DefenderParams& p);

FireSample sample_fire(const ControlPortfolio& s, const DefenderParams& p, stoch::RngStream& rng);
std::int64_t sample_virus_count(const ControlPortfolio& s, const DefenderParams& p,
                                stoch::RngStream& rng);
/// Total outage hours over `attacks` DDoS attempts against capacity `s`.
double sample_ddos_outage(int attacks, const ControlPortfolio& s, const DefenderParams& p,
                          stoch::RngStream& rng);
/// Deterministic in o and v except for one uniform for q_n and one for m.
Impacts compute_impacts(double duration_min, std::int64_t infections, double outage_hours,
                        const DefenderParams& p, stoch::RngStream& rng);
double insurance_coverage(InsurancePlan i, double facility_loss_eur, double fire_computer_eur,
                          double virus_repair_eur, const DefenderParams& p);
/// Exponential utility rescaled to [0, 1] over [0, utility_max_cost_eur],
/// clamped outside. Throws EvaluationError for non-finite costs.
double defender_utility(double cost_eur, const DefenderParams& p);

/// Draws an attack count by inversion. `row[k]` is the probability of
/// `attack_space[k]`; an empty row means no attack.
int sample_attack(std::span<const double> row, std::span<const int> attack_space,
                  stoch::RngStream& rng);

/// One full draw of the defender's chance nodes for (s, i).
DefenderSample sample_defender(const ControlPortfolio& s, InsurancePlan i,
                               std::span<const double> attack_row,
                               std::span<const int> attack_space, const DefenderParams& p,
                               stoch::RngStream& rng);

/// c_d for one draw; attack_row covers attacks 0..attack_row.size()-1.
double sample_total_cost(const ControlPortfolio& s, InsurancePlan i,
                         std::span<const double> attack_row, const DefenderParams& p,
                         stoch::RngStream& rng);

}  // namespace ara::casestudy
