// Acceptance checks, one PASS/FAIL line per criterion.
//   ara_acceptance [--criterion N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ara/analysis/decision_model.hpp"
#include "ara/analysis/rosi.hpp"
#include "ara/casestudy/model.hpp"
#include "ara/cli/commands.hpp"
#include "ara/core/dad_solver.hpp"
#include "ara/core/defender_solver.hpp"
#include "ara/stochastics/bayes.hpp"
#include "ara/stochastics/distributions.hpp"

using namespace ara;
using namespace ara::casestudy;
namespace fs = std::filesystem;

namespace {

const Execution kAllCores{0};

struct Check {
  std::vector<std::string> failures;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s << what << "=" << got << " (want " << want << " +/- " << tol << ")";
    detail << s.str() << "; ";
    expect(std::abs(got - want) <= tol, s.str());
  }
};

const AttackPolicyTable& attack_table(std::int64_t k, std::int64_t m) {
  static std::map<std::pair<std::int64_t, std::int64_t>, AttackPolicyTable> cache;
  auto it = cache.find({k, m});
  if (it == cache.end()) {
    const analysis::CaseStudyModel model(default_case_study());
    const analysis::SolverBudgets budgets{k, m, 1};
    const stoch::RngStream rng(0);
    it = cache.emplace(std::pair{k, m},
                       model.attack_table(budgets, rng.derive(analysis::kAttackPhase), kAllCores))
             .first;
  }
  return it->second;
}

void criterion1(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto& t = attack_table(1000, 200);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double p0 = t.row("1 tbps")[0];
  c.detail << "p(0|1 tbps)=" << p0 << "; " << secs << " s; ";
  c.expect(p0 >= 0.99, "p(a=0 | 1 tbps) < 0.99");
  c.expect(secs < 300, "runtime over 5 min");
}

void criterion2(Check& c) {
  const auto row = attack_table(1000, 1).row("none");
  double upper = 0;
  for (std::size_t a = 25; a < row.size(); ++a) upper += row[a];
  const auto mode = std::max_element(row.begin(), row.end()) - row.begin();
  c.near(upper, 0.910, 0.07, "p(a>=25|none)");
  c.detail << "mode=" << mode << "; ";
  c.expect(mode >= 28 && mode <= 30, "mode " + std::to_string(mode) + " not in {28,29,30}");
}

void criterion3(Check& c) {
  const auto row = attack_table(1000, 1).row("2 gbps");
  double low = 0;
  for (std::size_t a = 0; a <= 15; ++a) low += row[a];
  c.near(row[30], 0.276, 0.07, "p(a=30|2 gbps)");
  c.detail << "p(a<=15|2 gbps)=" << low << "; ";
  c.expect(low <= 0.02, "p(a<=15 | 2 gbps) > 0.02");
}

void criterion4(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const analysis::CaseStudyModel model(default_case_study());
  const auto sol = analysis::solve_model(model, analysis::SolverBudgets{}, stoch::RngStream(0),
                                         kAllCores);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto& ranked = sol.ranking.ranked;
  const std::string want = "anti-fire, firewall, no procedure, 1 tbps, comprehensive";
  c.detail << "best='" << ranked.front().decision << "'; ";
  c.expect(ranked.front().decision == want, "argmax is '" + ranked.front().decision + "'");
  const double best = ranked.front().expected_utility;
  const std::size_t n = ranked.size();
  const double bottom =
      (ranked[n - 1].expected_utility + ranked[n - 2].expected_utility +
       ranked[n - 3].expected_utility) / 3;
  c.near(best, 0.9954, 0.005, "best EU");
  c.near(bottom, 0.824, 0.005, "bottom-three EU");
  c.near(best - ranked[n - 1].expected_utility, 0.171, 0.010, "gap");
  c.detail << secs << " s; ";
  c.expect(secs < 180, "runtime over 3 min");
}

void criterion5(Check& c) {
  const auto post = stoch::beta_binomial_update(0.5, 0.5, 147, 6467);
  c.detail << "posterior=(" << post.a << ", " << post.b << "); ";
  c.expect(post.a == 147.5 && post.b == 6320.5, "posterior parameters differ");
  c.near(post.mean(), 0.022805, 1e-6, "mean");
}

void criterion6(Check& c) {
  const DefenderParams p = default_defender_params();
  const stoch::RngStream root(6);
  const int n = 1000000;
  std::int64_t capped = 0, over = 0;
  stoch::RngStream a = root.derive(1), b = root.derive(2);
  for (int i = 0; i < n; ++i) {
    capped += sample_fire({}, p, a).fires;
    over += stoch::sample_poisson(p.fire_rate_per_year, b) > 1;
  }
  const double lambda = p.fire_rate_per_year;
  c.near(static_cast<double>(capped) / n, 1 - std::exp(-lambda), 0.0005, "P(f=1)");
  c.near(static_cast<double>(over) / n, 0.00024, 0.0001, "P(f>1) uncapped");
}

void criterion7(Check& c) {
  const DefenderParams p = default_defender_params();
  c.detail << "u(0)=" << defender_utility(0, p) << "; u(7e6)=" << defender_utility(7e6, p) << "; ";
  c.expect(defender_utility(0, p) == 1.0, "u(0) != 1");
  c.expect(std::abs(defender_utility(7e6, p)) < 1e-12, "u(7e6) != 0");
  c.near(defender_utility(2.66e6, p), 0.5005, 1e-4, "u(2.66e6)");
}

void criterion8(Check& c) {
  const CaseStudyParams params = default_case_study();
  const DefenderParams& p = params.defender;

  // Row normalisation.
  const AttackPolicyTable table = solve_attack_table(params, 200, 2, stoch::RngStream(8));
  try {
    table.validate();
  } catch (const Error& e) {
    c.expect(false, std::string("row normalisation: ") + e.what());
  }

  // Cost identity and coverage bound over every pair.
  std::vector<double> row(31, 1.0 / 31);
  std::vector<int> space(31);
  for (int a = 0; a < 31; ++a) space[a] = a;
  DefenderParams fiery = p;
  fiery.fire_rate_per_year = 2;
  const stoch::RngStream root(9);
  bool identity = true, bound = true;
  for (const auto& pair : all_decision_pairs()) {
    for (std::uint64_t j = 0; j < 100; ++j) {
      stoch::RngStream r = root.derive({j});
      const DefenderSample s = sample_defender(pair.portfolio, pair.insurance, row, space, fiery, r);
      const Impacts& m = s.impacts;
      identity = identity && s.total_cost_eur == m.market_loss_eur + m.facility_loss_eur +
                                                     m.insurable_eur() + m.non_insurable_eur +
                                                     s.control_cost_eur + s.premium_eur -
                                                     s.coverage_eur;
      bound = bound && s.coverage_eur <= p.coverage_fraction * (m.facility_loss_eur +
                                                                m.insurable_eur()) + 1e-9;
    }
  }
  c.expect(identity, "cost identity");
  c.expect(bound, "coverage bound");

  // Argmax invariant under positive affine utility transforms.
  const auto pairs = all_decision_pairs();
  const std::vector<DecisionPair> some(pairs.begin(), pairs.begin() + 40);
  DefenderProblem base = make_defender_problem(params, some);
  DefenderProblem shifted = base;
  shifted.utility = [u = base.utility](double x) { return 2.5 * u(x) - 7; };
  const auto ra = solve_defender(base, table, 2000, stoch::RngStream(10));
  const auto rb = solve_defender(shifted, table, 2000, stoch::RngStream(10));
  c.expect(ra.order == rb.order, "affine invariance");

  // More DDoS capacity never raises expected cost under common random numbers.
  std::vector<double> heavy(31, 0.0);
  heavy[30] = 1;
  double diff = 0;
  for (int j = 0; j < 20000; ++j) {
    stoch::RngStream x = root.derive({1000u + j});
    stoch::RngStream y = x;
    diff += sample_total_cost({false, false, false, DdosTier::tbps1}, InsurancePlan::none, heavy,
                              p, y) -
            sample_total_cost({}, InsurancePlan::none, heavy, p, x);
  }
  c.expect(diff < 0, "monotone protection");

  // ROSI curve non-decreasing.
  const analysis::CaseStudyModel model(params);
  const auto curve = analysis::rosi_curve(model, {0, 5000, 10000, 15000, 20000, 25000},
                                          {200, 1, 2000}, stoch::RngStream(11), kAllCores);
  bool monotone = true;
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    monotone = monotone &&
               curve.points[i].expected_utility >= curve.points[i - 1].expected_utility;
  }
  c.expect(monotone, "ROSI monotonicity");
  c.detail << "6 property groups; ";
}

double linear_utility(double cost) { return 1 - cost / 10; }

void criterion9(Check& c) {
  // Defender: three decisions facing a fixed attack distribution; cost is
  // base + a * loss + U(0, width), utility linear, so EU is closed form.
  const std::vector<double> base = {1.0, 1.5, 0.4}, loss = {2.0, 0.5, 3.0}, width = {1, 2, 4};
  AttackPolicyTable table;
  table.defences = {"d"};
  table.attack_space = {0, 1, 2};
  table.probabilities = {{0.5, 0.3, 0.2}};
  table.draws_used = 1;
  const double mean_attack = 0.3 + 2 * 0.2;
  DefenderProblem problem;
  for (std::size_t d = 0; d < 3; ++d) problem.decisions.push_back({"x" + std::to_string(d), "d", 0});
  problem.utility = linear_utility;
  problem.cost_sampler = [&](std::size_t d, std::span<const double> row, stoch::RngStream& rng) {
    const int a = sample_attack(row, table.attack_space, rng);
    return base[d] + a * loss[d] + stoch::sample_uniform(0, width[d], rng);
  };
  const auto ranking = solve_defender(problem, table, 200000, stoch::RngStream(12));
  std::vector<double> exact(3);
  for (std::size_t d = 0; d < 3; ++d) {
    exact[d] = linear_utility(base[d] + mean_attack * loss[d] + width[d] / 2);
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const auto d = ranking.order[k];
    const auto& r = ranking.ranked[k];
    c.expect(std::abs(r.expected_utility - exact[d]) <= 3 * r.standard_error,
             "solve_defender " + r.decision);
  }
  const auto best = std::max_element(exact.begin(), exact.end()) - exact.begin();
  c.expect(ranking.best_index() == static_cast<std::size_t>(best), "solve_defender argmax");

  // DAD: the attacker attacks iff a uniform draw exceeds the preventive
  // threshold, so p(attack | p) = 1 - threshold[p].
  struct Hyper {
    double u;
  };
  const std::vector<double> threshold = {0.3, 0.8}, pre_cost = {0.0, 1.0}, re_cost = {0.0, 0.6};
  const std::vector<double> hit = {4.0, 1.5};  // attack loss by reactive choice
  AttackerProblem<int, Hyper> attacker;
  attacker.attack_space = {0, 1};
  attacker.hyper_model = [](stoch::RngStream& rng) { return Hyper{rng.uniform01()}; };
  attacker.payoff_sampler = [&](int a, const int& pre, const Hyper& h, stoch::RngStream&) {
    return a * (h.u - threshold[pre]);
  };
  attacker.random_utility = [](double payoff, const Hyper&) { return payoff; };
  DadProblem<int, int> dad;
  dad.preventive = {{"p0", 0}, {"p1", 1}};
  dad.reactive = {{"r0", 0}, {"r1", 1}};
  dad.utility = linear_utility;
  dad.cost_sampler = [&](const int& pre, const int& re, std::span<const double> row,
                         stoch::RngStream& rng) {
    const int a = sample_attack(row, attacker.attack_space, rng);
    return pre_cost[pre] + re_cost[re] + a * hit[re] + stoch::sample_uniform(0, 1, rng);
  };
  const std::int64_t k_draws = 40000;
  const auto sol = solve_defence_attack_defence(dad, attacker, 200000, k_draws, 1,
                                                stoch::RngStream(13));
  double best_exact = -INFINITY;
  std::pair<std::size_t, std::size_t> best_pair;
  for (std::size_t k = 0; k < sol.ranking.ranked.size(); ++k) {
    const auto [pre, re] = sol.pairs[sol.ranking.order[k]];
    const double q = 1 - threshold[pre];
    const double eu = linear_utility(pre_cost[pre] + re_cost[re] + q * hit[re] + 0.5);
    if (eu > best_exact) {
      best_exact = eu;
      best_pair = {pre, re};
    }
    // The attack table carries its own Monte Carlo error.
    const double table_se = hit[re] / 10 * std::sqrt(q * (1 - q) / k_draws);
    const auto& r = sol.ranking.ranked[k];
    const double se = std::hypot(r.standard_error, table_se);
    c.expect(std::abs(r.expected_utility - eu) <= 3 * se, "dad " + r.decision);
    const double p_attack = sol.attack_table.row(dad.preventive[pre].label)[1];
    c.expect(std::abs(p_attack - q) <= 3 * std::sqrt(q * (1 - q) / k_draws),
             "dad attack probability " + dad.preventive[pre].label);
  }
  c.expect(std::pair{sol.preventive_index, sol.reactive_index} == best_pair, "dad argmax");
  c.detail << "dad best=" << sol.preventive << "|" << sol.reactive << "; ";
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion10(Check& c) {
  std::mt19937_64 gen(std::random_device{}());
  const fs::path root =
      fs::temp_directory_path() / ("ara-acceptance-" + std::to_string(gen() % 1000000000));
  std::vector<fs::path> outs;
  for (const char* threads : {"1", "4", "1"}) {
    outs.push_back(root / ("run" + std::to_string(outs.size())));
    std::ostringstream out, err;
    const int code = cli::run({"full-report", "--seed", "7", "--k", "100", "--m", "2", "--n",
                               "500", "--threads", threads, "--out", outs.back().string()},
                              out, err);
    c.expect(code == 0, "full-report exit " + std::to_string(code) + ": " + err.str());
    if (code != 0) return;
  }
  for (const char* f : {"attack_table.csv", "defender_rank.csv", "rosi.csv", "sensitivity.csv"}) {
    const std::string ref = slurp(outs[0] / f);
    c.expect(!ref.empty(), std::string(f) + " empty");
    c.expect(ref == slurp(outs[1] / f), std::string(f) + " differs between 1 and 4 threads");
    c.expect(ref == slurp(outs[2] / f), std::string(f) + " differs between repeated runs");
  }
  fs::remove_all(root);
  c.detail << "threads 1/4/1; ";
}

const std::vector<std::pair<const char*, std::function<void(Check&)>>> kCriteria = {
    {"attacker table, total absorption", criterion1},
    {"attacker table, no protection", criterion2},
    {"attacker table, 2 gbps", criterion3},
    {"defender ranking", criterion4},
    {"Bayesian update", criterion5},
    {"fire model", criterion6},
    {"utility function", criterion7},
    {"property suite", criterion8},
    {"oracle equivalence", criterion9},
    {"determinism", criterion10},
};

bool run_one(std::size_t index) {
  Check c;
  try {
    kCriteria[index].second(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const bool ok = c.failures.empty();
  std::printf("%s criterion %zu (%s): %s", ok ? "PASS" : "FAIL", index + 1,
              kCriteria[index].first, c.detail.str().c_str());
  for (const auto& f : c.failures) std::printf("[failed: %s] ", f.c_str());
  std::printf("\n");
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> which;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--criterion" && i + 1 < argc) {
      const int n = std::atoi(argv[++i]);
      if (n < 1 || n > static_cast<int>(kCriteria.size())) {
        std::fprintf(stderr, "criterion must be 1..%zu\n", kCriteria.size());
        return 2;
      }
      which.push_back(static_cast<std::size_t>(n - 1));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (which.empty()) {
    for (std::size_t i = 0; i < kCriteria.size(); ++i) which.push_back(i);
  }
  bool ok = true;
  for (std::size_t i : which) ok = run_one(i) && ok;
  return ok ? 0 : 1;
}
