#include <gtest/gtest.h>

#include <cstdlib>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ara/analysis/constraints.hpp"
#include "ara/cli/commands.hpp"
#include "ara/cli/config.hpp"
#include "ara/cli/report.hpp"
#include "ara/errors.hpp"
#include "csv_util.hpp"

using namespace ara;
using namespace ara::cli;
namespace fs = std::filesystem;

namespace {

nlohmann::json default_json() {
  return nlohmann::json::parse(testutil::slurp(bundled_config_path()));
}

fs::path write_config(const nlohmann::json& j, const std::string& tag) {
  const fs::path path = testutil::fresh_dir(tag) / "model.json";
  std::ofstream(path) << j.dump(2);
  return path;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Config, BundledDefaultMatchesCodeDefaults) {
  const ModelConfig loaded = load_config(bundled_config_path());
  EXPECT_TRUE(loaded == default_config());
  EXPECT_EQ(loaded.budgets.k_draws, 1000);
  EXPECT_EQ(loaded.seed, 0u);
}

TEST(Config, RoundTrip) {
  const ModelConfig a = load_config(bundled_config_path());
  const ModelConfig b = parse_config(serialize_config(a));
  EXPECT_TRUE(a == b);
  EXPECT_EQ(serialize_config(a), serialize_config(b));
}

TEST(Config, SolverSectionOptional) {
  auto j = default_json();
  j.erase("solver");
  j.erase("analysis");
  j.erase("constraints");
  const ModelConfig c = parse_config(j.dump());
  EXPECT_EQ(c.budgets, analysis::SolverBudgets{});
  EXPECT_EQ(c.seed, 0u);
}

TEST(Config, TriangularOrderViolationNamesField) {
  auto j = default_json();
  j["defender"]["fire_duration_anti_fire_minutes"]["min"] = 70;
  try {
    parse_config(j.dump());
    FAIL();
  } catch (const ParameterDomainError& e) {
    EXPECT_EQ(e.field(), "defender.fire_duration_anti_fire_minutes");
  }
}

TEST(Config, MissingAndUnknownFieldsRejected) {
  auto j = default_json();
  j["defender"].erase("fire_rate_per_year");
  try {
    parse_config(j.dump());
    FAIL();
  } catch (const ConfigurationError& e) {
    EXPECT_NE(std::string(e.what()).find("defender.fire_rate_per_year"), std::string::npos);
  }
  j = default_json();
  j["attacker"]["attack_cost_euros"] = 1;
  try {
    parse_config(j.dump());
    FAIL();
  } catch (const ConfigurationError& e) {
    EXPECT_NE(std::string(e.what()).find("attacker.attack_cost_euros"), std::string::npos);
  }
  j = default_json();
  j["defender"]["premium_scale"] = "cheap";
  EXPECT_THROW(parse_config(j.dump()), ConfigurationError);
}

TEST(Config, ParseErrorReportsLine) {
  const std::string text = "{\n  \"solver\": {\n    \"k_draws\": 10,,\n  }\n}\n";
  try {
    parse_config(text, "broken.json");
    FAIL();
  } catch (const ConfigurationError& e) {
    EXPECT_NE(std::string(e.what()).find("broken.json:3:"), std::string::npos) << e.what();
  }
}

TEST(Config, EditedVirusRateChangesCounts) {
  auto j = default_json();
  j["defender"]["virus_infection_prob_per_computer_month"]["neither"] = 0.5;
  const ModelConfig c = parse_config(j.dump());
  EXPECT_EQ(c.model.defender.virus_infection_rates.neither, 0.5);
  stoch::RngStream a(1), b(1);
  double base = 0, edited = 0;
  const casestudy::DefenderParams d0 = casestudy::default_defender_params();
  for (int i = 0; i < 20000; ++i) {
    base += static_cast<double>(casestudy::sample_virus_count({}, d0, a));
    edited += static_cast<double>(casestudy::sample_virus_count({}, c.model.defender, b));
  }
  EXPECT_NEAR(base / 20000, 356.4, 2);
  EXPECT_NEAR(edited / 20000, 540, 2);
}

TEST(Report, NumberFormatAndQuoting) {
  EXPECT_EQ(format_number(0.1 + 0.2), "0.3");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3), "0.333333333333");
  ReportTable t{"x", {"a", "b"}, {}};
  t.add_row({std::string("p, q"), 1.5});
  EXPECT_EQ(to_csv(t), "a,b\n\"p, q\",1.5\n");
  t.add_row({std::string("short")});
  EXPECT_THROW(to_csv(t), EvaluationError);
  ReportTable nan{"y", {"v"}, {{NAN}}};
  EXPECT_THROW(to_csv(nan), EvaluationError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kExitValidation);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitValidation);
  const Result r = run_cli({"attacker-table", "--bogus", "1"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run_cli({"attacker-table", "--k", "many"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"attacker-table", "--k", "0"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, ValidationErrorExitCode) {
  auto j = default_json();
  j["defender"]["coverage_fraction"] = 2;
  const fs::path cfg = write_config(j, "badcfg");
  const Result r = run_cli({"attacker-table", "--config", cfg.string(), "--k", "5", "--out",
                            cfg.parent_path().string()});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("defender.coverage_fraction"), std::string::npos);
  EXPECT_EQ(run_cli({"attacker-table", "--config", "/nonexistent/model.json"}).code,
            kExitValidation);
}

TEST(Cli, InfeasibleExitCode) {
  auto j = default_json();
  j["constraints"]["required_controls"] = {"firewall"};
  const fs::path cfg = write_config(j, "infeasible");
  for (const char* cmd : {"defender-rank", "dad-solve"}) {
    const Result r = run_cli({cmd, "--config", cfg.string(), "--budget", "1000", "--k", "5",
                              "--n", "10", "--out", cfg.parent_path().string()});
    EXPECT_EQ(r.code, kExitInfeasible) << cmd << ": " << r.err;
  }
}

TEST(Cli, ThreadsEnvironmentValidated) {
  ::setenv("ARA_THREADS", "lots", 1);
  const fs::path out = testutil::fresh_dir("env");
  EXPECT_EQ(run_cli({"attacker-table", "--k", "5", "--out", out.string()}).code, kExitValidation);
  ::setenv("ARA_THREADS", "2", 1);
  EXPECT_EQ(run_cli({"attacker-table", "--k", "5", "--out", out.string()}).code, kExitOk);
  ::unsetenv("ARA_THREADS");
  const auto meta = nlohmann::json::parse(testutil::slurp(out / "meta.json"));
  EXPECT_EQ(meta["threads"], 2);
}

TEST(Cli, AttackerTableFile) {
  const fs::path out = testutil::fresh_dir("att");
  const Result r = run_cli({"attacker-table", "--seed", "1", "--k", "300", "--m", "2", "--out",
                            out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = testutil::read_csv(out / "attack_table.csv");
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].size(), 32u);
  EXPECT_EQ(rows[1][0], "1 tbps");
  EXPECT_EQ(rows[1][1], "1");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double sum = 0;
    for (std::size_t c = 1; c < rows[i].size(); ++c) sum += std::stod(rows[i][c]);
    EXPECT_NEAR(sum, 1.0, 1e-9);
    if (i == 1) {
      for (std::size_t c = 2; c < rows[i].size(); ++c) EXPECT_EQ(rows[i][c], "0");
    }
  }
  const auto meta = nlohmann::json::parse(testutil::slurp(out / "meta.json"));
  EXPECT_EQ(meta["seed"], 1);
  EXPECT_EQ(meta["k_draws"], 300);
  EXPECT_EQ(meta["m_inner"], 2);
  EXPECT_EQ(meta["command"], "attacker-table");
}

TEST(Cli, DefenderRankBudgetRestrictsSet) {
  const fs::path out = testutil::fresh_dir("rank");
  const Result r = run_cli({"defender-rank", "--k", "50", "--n", "200", "--budget", "15000",
                            "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = testutil::read_csv(out / "defender_rank.csv");
  const casestudy::DefenderParams d = casestudy::default_defender_params();
  std::size_t expected = 0;
  for (const auto& p : casestudy::all_decision_pairs()) {
    expected += analysis::upfront_cost(p, d) <= 15000;
  }
  ASSERT_EQ(rows.size(), expected + 1);
  const auto col = std::find(rows[0].begin(), rows[0].end(), "upfront_cost_eur") - rows[0].begin();
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(std::stod(rows[i][col]), 15000);
}

TEST(Cli, EveryCommandRuns) {
  auto j = default_json();
  j["analysis"]["sensitivity_parameters"] = {"fire_rate_per_year", "detection_cost_mean_eur"};
  j["analysis"]["rosi_budgets_eur"] = {0, 10000, 20000};
  const fs::path cfg = write_config(j, "every");
  for (const char* cmd : {"attacker-table", "defender-rank", "dad-solve", "sensitivity", "rosi",
                          "reserve-price", "full-report"}) {
    const fs::path out = cfg.parent_path() / cmd;
    const Result r = run_cli({cmd, "--config", cfg.string(), "--k", "30", "--n", "200",
                              "--out", out.string()});
    ASSERT_EQ(r.code, kExitOk) << cmd << ": " << r.err;
    EXPECT_TRUE(fs::exists(out / "meta.json"));
  }
  EXPECT_TRUE(fs::exists(cfg.parent_path() / "full-report" / "rosi.csv"));
  EXPECT_TRUE(fs::exists(cfg.parent_path() / "full-report" / "sensitivity.csv"));
  EXPECT_TRUE(fs::exists(cfg.parent_path() / "dad-solve" / "dad_rank.csv"));
  EXPECT_EQ(testutil::read_csv(cfg.parent_path() / "sensitivity" / "sensitivity.csv").size(),
            1u + 2 * 5);
}

TEST(Cli, ByteIdenticalAcrossThreads) {
  auto j = default_json();
  j["analysis"]["sensitivity_parameters"] = {"premium_scale"};
  const fs::path cfg = write_config(j, "det");
  std::vector<fs::path> outs;
  for (const char* threads : {"1", "3", "1"}) {
    outs.push_back(cfg.parent_path() / ("t" + std::to_string(outs.size())));
    const Result r = run_cli({"full-report", "--config", cfg.string(), "--k", "40", "--n",
                              "300", "--threads", threads, "--out", outs.back().string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  for (const char* f : {"attack_table.csv", "defender_rank.csv", "rosi.csv", "sensitivity.csv"}) {
    const std::string ref = testutil::slurp(outs[0] / f);
    EXPECT_FALSE(ref.empty());
    EXPECT_EQ(ref, testutil::slurp(outs[1] / f)) << f;
    EXPECT_EQ(ref, testutil::slurp(outs[2] / f)) << f;
  }
}
