#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace ara::cli {

using Cell = std::variant<std::string, std::int64_t, double>;

struct ReportTable {
  std::string name;  // file stem, e.g. "attack_table"
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  /// Row widths match the header and numeric cells are finite; throws
  /// EvaluationError otherwise.
  void validate() const;
};

/// RFC 4180 CSV, numbers printed with 12 significant digits.
std::string to_csv(const ReportTable& table);
std::string format_number(double x);

struct RunMetadata {
  std::string command;
  std::string config_path;
  std::uint64_t seed = 0;
  std::int64_t k_draws = 0;
  std::int64_t m_inner = 0;
  std::int64_t n_samples = 0;
  unsigned threads = 1;
  double wall_clock_seconds = 0.0;
  std::vector<std::string> outputs;
};

/// Writes every table as <out>/<name>.csv followed by <out>/meta.json.
void write_reports(const std::filesystem::path& out_dir, const std::vector<ReportTable>& tables,
                   RunMetadata meta);

}  // namespace ara::cli
