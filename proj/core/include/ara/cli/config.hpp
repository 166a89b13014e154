#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ara/analysis/decision_model.hpp"
#include "ara/casestudy/model.hpp"

namespace ara::cli {

// Grids for the sweeping commands. Sensitivity values are multipliers of
// each knob's configured value.
struct AnalysisGrids {
  std::vector<std::string> sensitivity_parameters;  // empty: every knob
  std::vector<double> sensitivity_multipliers = {0.5, 0.75, 1.0, 1.25, 1.5};
  std::vector<double> rosi_budgets_eur;  // empty: 0 to 24000 in steps of 1000

  bool operator==(const AnalysisGrids&) const = default;
};

// Decision-space restrictions applied by every ranking command.
struct DecisionConstraints {
  std::optional<double> budget_limit_eur;  // --budget overrides
  // Any of "anti_fire", "firewall", "procedures", "ddos".
  std::vector<std::string> required_controls;
  bool insurance_required = false;

  bool operator==(const DecisionConstraints&) const = default;
};

struct ModelConfig {
  casestudy::CaseStudyParams model;
  analysis::SolverBudgets budgets;
  std::uint64_t seed = 0;
  AnalysisGrids grids;
  DecisionConstraints constraints;

  bool operator==(const ModelConfig&) const = default;
};

/// The configuration equal to default_case_study() with default budgets.
ModelConfig default_config();

/// Parses and validates. Syntax errors raise ConfigurationError with the line
/// and column; missing, unknown or mistyped fields raise ConfigurationError
/// naming the dotted field path; values outside their domain raise
/// ParameterDomainError naming the field.
ModelConfig parse_config(const std::string& text, const std::string& source = "<config>");
ModelConfig load_config(const std::filesystem::path& path);

/// Pretty-printed JSON accepted by parse_config.
std::string serialize_config(const ModelConfig& config);

/// Path of the bundled default configuration.
std::filesystem::path bundled_config_path();

}  // namespace ara::cli
