#include <benchmark/benchmark.h>

#include "ara/analysis/decision_model.hpp"
#include "ara/casestudy/model.hpp"
#include "ara/core/estimator.hpp"

using namespace ara;
using namespace ara::casestudy;

static void BM_DefenderSample(benchmark::State& state) {
  const DefenderParams p = default_defender_params();
  std::vector<double> row(31, 1.0 / 31);
  stoch::RngStream rng(1);
  const ControlPortfolio s{true, true, false, DdosTier::gbps2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_total_cost(s, InsurancePlan::comprehensive, row, p, rng));
  }
}
BENCHMARK(BM_DefenderSample);

static void BM_AttackerSample(benchmark::State& state) {
  const AttackerParams p = default_attacker_params();
  stoch::RngStream rng(2);
  const AttackerHyperDraw hyper = draw_attacker_hyper(p, rng);
  const int attacks = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_attacker(attacks, 2, hyper, p, rng).result_eur);
  }
}
BENCHMARK(BM_AttackerSample)->Arg(1)->Arg(15)->Arg(30);

static void BM_AttackTable(benchmark::State& state) {
  const CaseStudyParams params = default_case_study();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_attack_table(params, state.range(0), state.range(1), stoch::RngStream(3)));
  }
}
BENCHMARK(BM_AttackTable)->Args({100, 1})->Args({100, 10})->Unit(benchmark::kMillisecond);

static void BM_EstimateDecision(benchmark::State& state) {
  const CaseStudyParams params = default_case_study();
  const auto pairs = all_decision_pairs();
  const DefenderProblem problem = make_defender_problem(params, pairs);
  const AttackPolicyTable table = solve_attack_table(params, 100, 1, stoch::RngStream(4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_expected_utility(problem, 0, table, state.range(0), stoch::RngStream(5)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateDecision)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
