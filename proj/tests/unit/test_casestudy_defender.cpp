#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "ara/casestudy/defender.hpp"
#include "ara/errors.hpp"

using namespace ara;
using namespace ara::casestudy;

namespace {

const DefenderParams P = default_defender_params();

ControlPortfolio portfolio(bool af, bool fw, bool pr, DdosTier t) { return {af, fw, pr, t}; }

std::vector<double> point_row(int a) {
  std::vector<double> row(31, 0.0);
  row[a] = 1.0;
  return row;
}

}  // namespace

TEST(DecisionSpace, Counts) {
  EXPECT_EQ(all_portfolios().size(), 40u);
  const auto pairs = all_decision_pairs();
  EXPECT_EQ(pairs.size(), 160u);
  std::set<std::string> labels;
  for (const auto& p : pairs) labels.insert(p.label());
  EXPECT_EQ(labels.size(), 160u);
  EXPECT_EQ((DecisionPair{portfolio(true, true, false, DdosTier::tbps1),
                          InsurancePlan::comprehensive}
                 .label()),
            "anti-fire, firewall, no procedure, 1 tbps, comprehensive");
}

TEST(PortfolioCost, TableValues) {
  EXPECT_EQ(portfolio_cost({}, P), 0.0);
  EXPECT_EQ(portfolio_cost(portfolio(true, true, false, DdosTier::tbps1), P), 15750.0);
  EXPECT_EQ(portfolio_cost(portfolio(true, true, true, DdosTier::gbps2), P), 8150.0);
  EXPECT_EQ(ddos_capacity_gbps(DdosTier::none, P), 0.0);
  EXPECT_EQ(ddos_capacity_gbps(DdosTier::tbps1, P), 1000.0);
}

TEST(Premium, TableCells) {
  const ControlPortfolio none{};
  EXPECT_EQ(insurance_premium(InsurancePlan::traditional, portfolio(true, false, false, DdosTier::none), P), 300);
  EXPECT_EQ(insurance_premium(InsurancePlan::none, portfolio(true, true, true, DdosTier::tbps1), P), 0);
  EXPECT_EQ(insurance_premium(InsurancePlan::comprehensive, none, P), 700);
  EXPECT_EQ(insurance_premium(InsurancePlan::comprehensive, portfolio(true, false, false, DdosTier::none), P), 500);
  EXPECT_EQ(insurance_premium(InsurancePlan::comprehensive, portfolio(false, true, false, DdosTier::none), P), 600);
  EXPECT_EQ(insurance_premium(InsurancePlan::comprehensive, portfolio(false, false, true, DdosTier::none), P), 650);
  EXPECT_EQ(insurance_premium(InsurancePlan::cyber, portfolio(false, false, false, DdosTier::gbps2), P), 200);
  EXPECT_EQ(insurance_premium(InsurancePlan::cyber, portfolio(false, false, true, DdosTier::none), P), 250);
  EXPECT_EQ(insurance_premium(InsurancePlan::comprehensive, portfolio(true, true, false, DdosTier::tbps1), P), 400);
}

TEST(Fire, RateAndDurations) {
  stoch::RngStream r(1);
  const int n = 1000000;
  int fires = 0;
  double dur = 0;
  for (int i = 0; i < n; ++i) {
    const FireSample f = sample_fire({}, P, r);
    ASSERT_TRUE(f.fires == 0 || f.fires == 1);
    if (f.fires == 0) {
      ASSERT_EQ(f.duration_min, 0.0);
    } else {
      ++fires;
      dur += f.duration_min;
    }
  }
  EXPECT_NEAR(static_cast<double>(fires) / n, 1 - std::exp(-0.022), 0.0005);

  // Conditional durations, sampled with the fire forced.
  DefenderParams always = P;
  always.fire_rate_per_year = 50;
  for (bool anti_fire : {false, true}) {
    double sum = 0;
    int m = 0;
    for (int i = 0; i < 100000; ++i) {
      const FireSample f = sample_fire(portfolio(anti_fire, false, false, DdosTier::none), always, r);
      if (f.fires) {
        sum += f.duration_min;
        ++m;
      }
    }
    if (anti_fire) {
      EXPECT_NEAR(sum / m, (0.8 + 10 + 63) / 3, 0.5);
    } else {
      EXPECT_NEAR(sum / m, 78, 2);
    }
  }
}

TEST(Virus, MeansAndRates) {
  EXPECT_EQ(virus_infection_probability(portfolio(false, true, true, DdosTier::none), P), 0.0025);
  EXPECT_EQ(virus_infection_probability(portfolio(false, true, false, DdosTier::none), P), 0.005);
  EXPECT_EQ(virus_infection_probability(portfolio(false, false, true, DdosTier::none), P), 0.1666);
  EXPECT_EQ(virus_infection_probability(portfolio(true, false, false, DdosTier::tbps1), P), 0.33);

  stoch::RngStream r(2);
  for (auto [s, expect, tol] : {std::tuple{portfolio(false, true, true, DdosTier::none), 2.7, 0.1},
                                std::tuple{ControlPortfolio{}, 356.4, 2.0}}) {
    double sum = 0;
    for (int i = 0; i < 100000; ++i) sum += static_cast<double>(sample_virus_count(s, P, r));
    EXPECT_NEAR(sum / 100000, expect, tol);
  }
}

TEST(Ddos, Outage) {
  stoch::RngStream r(3);
  EXPECT_EQ(sample_ddos_outage(0, {}, P, r), 0.0);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) sum += sample_ddos_outage(10, {}, P, r);
  EXPECT_NEAR(sum / 100000, 40, 0.5);
  const auto full = portfolio(false, false, false, DdosTier::tbps1);
  for (int i = 0; i < 100000; ++i) ASSERT_EQ(sample_ddos_outage(10, full, P, r), 0.0);
}

TEST(Impacts, Formulas) {
  stoch::RngStream r(4);
  const Impacts zero = compute_impacts(0, 0, 0, P, r);
  EXPECT_EQ(zero.facility_loss_eur + zero.insurable_eur() + zero.non_insurable_eur +
                zero.market_loss_eur,
            0.0);

  for (double o : {120.0, 500.0}) {
    const Impacts full = compute_impacts(o, 0, 0, P, r);
    EXPECT_EQ(full.facility_loss_eur, 5'000'000);
    EXPECT_EQ(full.fire_computer_eur, 200'000);
  }
  const Impacts half = compute_impacts(60, 10, 0, P, r);
  EXPECT_EQ(half.facility_loss_eur, 2'500'000);
  EXPECT_EQ(half.virus_repair_eur, 310);
  EXPECT_GE(half.non_insurable_eur, 0);
  EXPECT_LE(half.non_insurable_eur, 560 * 10 * 0.05);

  // 192 hours: between the low-rate loss and the cap.
  for (int i = 0; i < 1000; ++i) {
    const Impacts m = compute_impacts(0, 0, 192, P, r);
    ASSERT_LE(m.market_loss_eur, 1'500'000);
    ASSERT_GE(m.market_loss_eur, 3e6 * 192 * 0.0026 - 1e-6);
  }
  const Impacts huge = compute_impacts(0, 0, 1000, P, r);
  EXPECT_EQ(huge.market_loss_eur, 1'500'000);
}

TEST(Coverage, Products) {
  EXPECT_EQ(insurance_coverage(InsurancePlan::none, 5e6, 2e5, 310, P), 0);
  EXPECT_EQ(insurance_coverage(InsurancePlan::traditional, 5e6, 2e5, 310, P), 4'160'000);
  EXPECT_EQ(insurance_coverage(InsurancePlan::cyber, 5e6, 2e5, 310, P), 248);
  EXPECT_EQ(insurance_coverage(InsurancePlan::comprehensive, 5e6, 2e5, 310, P), 4'160'248);
}

TEST(Utility, Anchors) {
  EXPECT_DOUBLE_EQ(defender_utility(0, P), 1.0);
  EXPECT_NEAR(defender_utility(7e6, P), 0.0, 1e-15);
  // Roughly one half; the closed form is below.
  EXPECT_NEAR(defender_utility(2'660'000, P),
              (std::exp(1 - 2.66 / 7) - 1) / (std::numbers::e - 1), 1e-15);
  EXPECT_NEAR(defender_utility(2'660'000, P), 0.5, 1e-3);
  EXPECT_EQ(defender_utility(9e6, P), 0.0);
  EXPECT_THROW(defender_utility(NAN, P), EvaluationError);
}

TEST(TotalCost, NoIncidentRegression) {
  DefenderParams quiet = P;
  quiet.fire_rate_per_year = 0;
  quiet.virus_infection_rates = {0, 0, 0, 0};
  stoch::RngStream r(5);
  const auto best = portfolio(true, true, false, DdosTier::tbps1);
  EXPECT_EQ(sample_total_cost(best, InsurancePlan::comprehensive, point_row(0), quiet, r), 16150);
  EXPECT_EQ(sample_total_cost({}, InsurancePlan::none, point_row(0), quiet, r), 0.0);
}

TEST(TotalCost, IdentityCoverageAndBounds) {
  std::vector<double> row(31, 1.0 / 31);
  stoch::RngStream root(6);
  const std::vector<int> space = [] {
    std::vector<int> s(31);
    for (int a = 0; a < 31; ++a) s[a] = a;
    return s;
  }();
  DefenderParams fiery = P;
  fiery.fire_rate_per_year = 2;
  for (const auto& pair : all_decision_pairs()) {
    for (std::uint64_t j = 0; j < 200; ++j) {
      stoch::RngStream r = root.derive({j});
      const DefenderSample s = sample_defender(pair.portfolio, pair.insurance, row, space, fiery, r);
      const Impacts& m = s.impacts;
      ASSERT_EQ(s.total_cost_eur, m.market_loss_eur + m.facility_loss_eur + m.insurable_eur() +
                                      m.non_insurable_eur + s.control_cost_eur + s.premium_eur -
                                      s.coverage_eur);
      ASSERT_LE(s.coverage_eur, 0.8 * (m.facility_loss_eur + m.fire_computer_eur +
                                       m.virus_repair_eur) + 1e-9);
      ASSERT_LE(m.market_loss_eur, 1'500'000);
      ASSERT_LE(m.facility_loss_eur, 5'000'000);
      ASSERT_LE(m.fire_computer_eur, 200'000);
      ASSERT_GE(m.non_insurable_eur, 0);
      if (s.fire.duration_min >= 120) {
        ASSERT_EQ(m.facility_loss_eur, 5'000'000);
        ASSERT_EQ(m.fire_computer_eur, 200'000);
      }
    }
  }
}

TEST(TotalCost, MonotoneProtection) {
  // Same streams for both portfolios; a fixed heavy attack row.
  const auto row = point_row(30);
  const int n = 100000;
  double sum_none = 0, sum_full = 0, ss = 0;
  const stoch::RngStream root(7);
  for (int j = 0; j < n; ++j) {
    stoch::RngStream a = root.derive({static_cast<std::uint64_t>(j)});
    stoch::RngStream b = a;
    const double c0 = sample_total_cost({}, InsurancePlan::none, row, P, a);
    const double c1 =
        sample_total_cost(portfolio(false, false, false, DdosTier::tbps1), InsurancePlan::none, row, P, b);
    sum_none += c0;
    sum_full += c1;
    ss += (c1 - c0) * (c1 - c0);
  }
  const double diff = (sum_full - sum_none) / n;
  const double se = std::sqrt(ss / n - diff * diff) / std::sqrt(n);
  EXPECT_LT(diff, 3 * se);
  EXPECT_LT(diff, 0);
}

TEST(Params, ValidationNamesField) {
  DefenderParams bad = P;
  bad.fire_duration_anti_fire_minutes = {63, 10, 0.8};
  try {
    bad.validate();
    FAIL();
  } catch (const ParameterDomainError& e) {
    EXPECT_EQ(e.field(), "fire_duration_anti_fire_minutes");
  }
  bad = P;
  bad.coverage_fraction = 1.5;
  EXPECT_THROW(bad.validate(), ParameterDomainError);
  EXPECT_NO_THROW(P.validate());
}
