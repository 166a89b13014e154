#include "ara/cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ara/analysis/constraints.hpp"
#include "ara/analysis/reservation.hpp"
#include "ara/analysis/rosi.hpp"
#include "ara/analysis/sensitivity.hpp"
#include "ara/cli/config.hpp"
#include "ara/cli/report.hpp"
#include "ara/errors.hpp"

namespace ara::cli {

namespace {

using analysis::CaseStudyModel;
using casestudy::DecisionPair;

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> n;
  std::optional<double> budget;
  std::string out = ".";
  std::optional<unsigned> threads;
};

struct Context {
  ModelConfig config;
  std::string config_path;
  Execution exec;
  std::optional<double> budget;
  stoch::RngStream rng{0};

  CaseStudyModel model() const { return CaseStudyModel(config.model); }
};

unsigned threads_from_env() {
  const char* env = std::getenv("ARA_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 4096) {
    throw ArgumentError(std::string("ARA_THREADS must be a non-negative integer, got '") + env +
                        "'");
  }
  return static_cast<unsigned>(v);
}

Context make_context(const Options& o) {
  Context ctx;
  ctx.config_path = o.config.empty() ? bundled_config_path().string() : o.config;
  ctx.config = load_config(ctx.config_path);
  if (o.seed) ctx.config.seed = *o.seed;
  if (o.k) ctx.config.budgets.k_draws = *o.k;
  if (o.m) ctx.config.budgets.m_inner = *o.m;
  if (o.n) ctx.config.budgets.n_samples = *o.n;
  if (ctx.config.budgets.k_draws < 1) throw ArgumentError("--k must be >= 1");
  if (ctx.config.budgets.m_inner < 1) throw ArgumentError("--m must be >= 1");
  if (ctx.config.budgets.n_samples < 1) throw ArgumentError("--n must be >= 1");
  if (o.budget && !(*o.budget >= 0)) throw ArgumentError("--budget must be >= 0");
  ctx.budget = o.budget;
  ctx.exec.threads = o.threads ? *o.threads : threads_from_env();
  ctx.rng = stoch::RngStream(ctx.config.seed);
  return ctx;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

ReportTable attack_table_report(const AttackPolicyTable& table, const std::string& name) {
  ReportTable t;
  t.name = name;
  t.columns.push_back("defence");
  for (int a : table.attack_space) t.columns.push_back(std::to_string(a));
  for (std::size_t r = 0; r < table.defences.size(); ++r) {
    std::vector<Cell> row{table.defences[r]};
    for (double p : table.probabilities[r]) row.emplace_back(p);
    t.add_row(std::move(row));
  }
  return t;
}

ReportTable ranking_report(const CaseStudyModel& model, const std::vector<DecisionPair>& pairs,
                           const DefenderRanking& ranking) {
  ReportTable t;
  t.name = "defender_rank";
  t.columns = {"rank",      "decision",      "anti_fire",        "firewall",
               "procedures", "ddos",         "insurance",        "upfront_cost_eur",
               "expected_utility", "standard_error"};
  for (std::size_t r = 0; r < ranking.ranked.size(); ++r) {
    const DecisionPair& p = pairs[ranking.order[r]];
    const EvaluationResult& e = ranking.ranked[r];
    t.add_row({static_cast<std::int64_t>(r + 1), e.decision, yes_no(p.portfolio.anti_fire),
               yes_no(p.portfolio.firewall), yes_no(p.portfolio.procedures),
               casestudy::to_string(p.portfolio.ddos), casestudy::to_string(p.insurance),
               model.upfront_cost(p), e.expected_utility, e.standard_error});
  }
  return t;
}

bool has_control(const casestudy::ControlPortfolio& s, const std::string& control) {
  if (control == "anti_fire") return s.anti_fire;
  if (control == "firewall") return s.firewall;
  if (control == "procedures") return s.procedures;
  return s.ddos != casestudy::DdosTier::none;
}

analysis::ConstraintSet constraint_set(const Context& ctx) {
  const DecisionConstraints& c = ctx.config.constraints;
  analysis::ConstraintSet set;
  set.budget_limit_eur = ctx.budget ? ctx.budget : c.budget_limit_eur;
  for (const std::string& control : c.required_controls) {
    set.custom_predicates.push_back(
        {"requires " + control,
         [control](const DecisionPair& p) { return has_control(p.portfolio, control); }});
  }
  if (c.insurance_required) {
    set.custom_predicates.push_back(
        {"insurance required",
         [](const DecisionPair& p) { return p.insurance != casestudy::InsurancePlan::none; }});
  }
  return set;
}

std::vector<DecisionPair> constrained_pairs(const Context& ctx, const CaseStudyModel& model) {
  const std::vector<DecisionPair> all = model.decisions();
  const analysis::ConstraintSet constraints = constraint_set(ctx);
  if (constraints.empty()) return all;
  return analysis::apply_constraints(all, constraints, ctx.config.model.defender);
}

std::vector<ReportTable> cmd_attacker_table(const Context& ctx) {
  const CaseStudyModel model = ctx.model();
  const AttackPolicyTable table =
      model.attack_table(ctx.config.budgets, ctx.rng.derive(analysis::kAttackPhase), ctx.exec);
  return {attack_table_report(table, "attack_table")};
}

std::vector<ReportTable> cmd_defender_rank(const Context& ctx) {
  const CaseStudyModel model = ctx.model();
  const std::vector<DecisionPair> pairs = constrained_pairs(ctx, model);
  const analysis::ModelSolution sol =
      analysis::solve_model(model, ctx.config.budgets, ctx.rng, ctx.exec, pairs);
  return {attack_table_report(sol.attack_table, "attack_table"),
          ranking_report(model, sol.pairs, sol.ranking)};
}

std::vector<ReportTable> cmd_dad_solve(const Context& ctx) {
  using casestudy::PreventiveControls;
  using casestudy::ReactiveControls;
  auto problem = casestudy::make_dad_problem(ctx.config.model);
  const analysis::ConstraintSet constraints = constraint_set(ctx);
  if (!constraints.empty()) {
    const casestudy::DefenderParams& d = ctx.config.model.defender;
    problem.feasible = [constraints, d](const PreventiveControls& p, const ReactiveControls& r) {
      const DecisionPair pair{{p.anti_fire, p.firewall, r.procedures, p.ddos}, r.insurance};
      return analysis::satisfies(pair, constraints, d);
    };
    // Same check as the flat ranking, so an empty space reports as infeasible.
    analysis::apply_constraints(casestudy::all_decision_pairs(), constraints, d);
  }
  const auto attacker = casestudy::make_dad_attacker_problem(ctx.config.model);
  const auto& b = ctx.config.budgets;
  const DadSolution sol = solve_defence_attack_defence(problem, attacker, b.n_samples, b.k_draws,
                                                       b.m_inner, ctx.rng, ctx.exec);

  ReportTable rank;
  rank.name = "dad_rank";
  rank.columns = {"rank", "preventive", "reactive", "upfront_cost_eur", "expected_utility",
                  "standard_error"};
  for (std::size_t r = 0; r < sol.ranking.ranked.size(); ++r) {
    const auto [pi, ri] = sol.pairs[sol.ranking.order[r]];
    const EvaluationResult& e = sol.ranking.ranked[r];
    rank.add_row({static_cast<std::int64_t>(r + 1), problem.preventive[pi].label,
                  problem.reactive[ri].label,
                  problem.upfront_cost(problem.preventive[pi].value, problem.reactive[ri].value),
                  e.expected_utility, e.standard_error});
  }
  return {attack_table_report(sol.attack_table, "dad_attack_table"), rank};
}

ReportTable sensitivity_report(const Context& ctx) {
  const CaseStudyModel model = ctx.model();
  std::vector<std::string> labels = ctx.config.grids.sensitivity_parameters;
  if (labels.empty()) labels = model.parameter_labels();

  ReportTable t;
  t.name = "sensitivity";
  t.columns = {"parameter",        "multiplier",     "value",         "best_decision",
               "expected_utility", "standard_error", "argmax_changed"};
  for (const auto& label : labels) {
    const double base = model.parameter(label);
    std::vector<double> values;
    std::vector<double> multipliers;
    for (double m : ctx.config.grids.sensitivity_multipliers) {
      const double v = base * m;
      // A zero-valued knob collapses the grid; keep the first occurrence.
      if (!values.empty() && !(v > values.back())) continue;
      // Points outside the knob's domain (e.g. a low rate above the high one) are dropped.
      try {
        model.with_parameter(label, v);
      } catch (const ParameterDomainError&) {
        continue;
      }
      values.push_back(v);
      multipliers.push_back(m);
    }
    const analysis::SensitivityReport rep = analysis::sensitivity_sweep(
        model, label, values, ctx.config.budgets, ctx.rng, ctx.exec);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      const auto& row = rep.rows[i];
      t.add_row({label, multipliers[i], row.value, row.best_decision, row.expected_utility,
                 row.standard_error, std::string(yes_no(rep.argmax_changed))});
    }
  }
  return t;
}

std::vector<double> rosi_grid(const Context& ctx) {
  std::vector<double> grid = ctx.config.grids.rosi_budgets_eur;
  if (grid.empty()) {
    for (int b = 0; b <= 24'000; b += 1'000) grid.push_back(b);
  }
  if (ctx.budget) {
    std::erase_if(grid, [&](double b) { return b > *ctx.budget; });
    if (grid.empty() || grid.back() < *ctx.budget) grid.push_back(*ctx.budget);
  }
  return grid;
}

ReportTable rosi_report(const Context& ctx) {
  const CaseStudyModel model = ctx.model();
  const analysis::RosiCurve curve =
      analysis::rosi_curve(model, rosi_grid(ctx), ctx.config.budgets, ctx.rng, ctx.exec);
  ReportTable t;
  t.name = "rosi";
  t.columns = {"budget_eur",       "feasible",       "best_decision", "spend_eur",
               "expected_utility", "standard_error"};
  for (const auto& p : curve.points) {
    t.add_row({p.budget_eur, std::string(yes_no(p.feasible)), p.best_decision, p.spend_eur,
               p.expected_utility, p.standard_error});
  }
  return t;
}

ReportTable reserve_price_report(const Context& ctx) {
  const CaseStudyModel model = ctx.model();
  const std::vector<DecisionPair> pairs = constrained_pairs(ctx, model);
  const analysis::ModelSolution sol =
      analysis::solve_model(model, ctx.config.budgets, ctx.rng, ctx.exec, pairs);
  const casestudy::ControlPortfolio portfolio = sol.best_pair().portfolio;

  ReportTable t;
  t.name = "reserve_price";
  t.columns = {"portfolio",
               "insurance",
               "baseline_premium_eur",
               "reservation_multiplier",
               "reservation_premium_eur",
               "preferred_at_baseline",
               "insured_expected_utility",
               "uninsured_expected_utility"};
  for (casestudy::InsurancePlan plan : casestudy::kInsurancePlans) {
    if (plan == casestudy::InsurancePlan::none) continue;
    const analysis::ReservationResult r = analysis::insurance_reservation_price(
        model, {portfolio, plan}, ctx.config.budgets, ctx.rng, ctx.exec);
    t.add_row({portfolio.label(), std::string(casestudy::to_string(plan)),
               r.baseline_premium_eur, r.multiplier, r.premium_eur,
               std::string(yes_no(r.preferred)), r.insured_eu, r.alternative_eu});
  }
  return t;
}

std::vector<ReportTable> cmd_full_report(const Context& ctx) {
  std::vector<ReportTable> out = cmd_defender_rank(ctx);
  out.push_back(rosi_report(ctx));
  out.push_back(sensitivity_report(ctx));
  return out;
}

void add_common_options(CLI::App& sub, Options& o) {
  sub.add_option("--config", o.config, "Model configuration (JSON); defaults to the bundled file");
  sub.add_option("--seed", o.seed, "Master seed");
  sub.add_option("--k", o.k, "Hyper-draws K for the attack table");
  sub.add_option("--m", o.m, "Inner samples M per hyper-draw and attack");
  sub.add_option("--n", o.n, "Monte Carlo samples N per decision");
  sub.add_option("--budget", o.budget, "Spend limit on controls plus premium, euros");
  sub.add_option("--out", o.out, "Output directory")->capture_default_str();
  sub.add_option("--threads", o.threads, "Worker threads (0 = all cores); falls back to ARA_THREADS");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adversarial risk analysis for cybersecurity resource allocation", "ara"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ARA_VERSION);

  Options opts;
  using Command = std::vector<ReportTable> (*)(const Context&);
  struct Entry {
    const char* name;
    const char* help;
    Command fn;
  };
  const Entry entries[] = {
      {"attacker-table", "Estimate p(attacks | DDoS protection)", cmd_attacker_table},
      {"defender-rank", "Rank every (portfolio, insurance) pair by expected utility",
       cmd_defender_rank},
      {"dad-solve", "Defence-attack-defence: preventive, then attack, then reactive controls",
       cmd_dad_solve},
      {"sensitivity", "One-at-a-time sensitivity of the optimal decision",
       [](const Context& c) { return std::vector<ReportTable>{sensitivity_report(c)}; }},
      {"rosi", "Optimal expected utility per security budget",
       [](const Context& c) { return std::vector<ReportTable>{rosi_report(c)}; }},
      {"reserve-price", "Maximum acceptable premium per insurance product",
       [](const Context& c) { return std::vector<ReportTable>{reserve_price_report(c)}; }},
      {"full-report", "defender-rank, rosi and sensitivity in one run", cmd_full_report},
  };
  std::vector<CLI::App*> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common_options(*sub, opts);
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << ARA_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  std::size_t chosen = 0;
  while (!subs[chosen]->parsed()) ++chosen;
  const Entry& entry = entries[chosen];

  try {
    const auto start = std::chrono::steady_clock::now();
    const Context ctx = make_context(opts);
    const std::vector<ReportTable> tables = entry.fn(ctx);

    RunMetadata meta;
    meta.command = entry.name;
    meta.config_path = ctx.config_path;
    meta.seed = ctx.config.seed;
    meta.k_draws = ctx.config.budgets.k_draws;
    meta.m_inner = ctx.config.budgets.m_inner;
    meta.n_samples = ctx.config.budgets.n_samples;
    meta.threads = resolve_threads(ctx.exec.threads);
    meta.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_reports(opts.out, tables, meta);
    for (const auto& t : tables) {
      out << "wrote " << (std::filesystem::path(opts.out) / (t.name + ".csv")).string() << "\n";
    }
    return kExitOk;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ParameterDomainError& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConfigurationError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ArgumentError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace ara::cli
