#include "ara/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "ara/errors.hpp"

#ifndef ARA_VERSION
#define ARA_VERSION "unknown"
#endif

namespace ara::cli {

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw ConfigurationError("cannot write '" + path.string() + "'");
}

}  // namespace

void ReportTable::add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }

void ReportTable::validate() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns.size()) {
      throw EvaluationError(name + ": row " + std::to_string(r) + " has " +
                            std::to_string(rows[r].size()) + " cells, expected " +
                            std::to_string(columns.size()));
    }
    for (const Cell& c : rows[r]) {
      if (const double* x = std::get_if<double>(&c); x && !std::isfinite(*x)) {
        throw EvaluationError(name + ": non-finite cell in row " + std::to_string(r));
      }
    }
  }
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_csv(const ReportTable& table) {
  table.validate();
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += quote(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
              out += quote(v);
            } else if constexpr (std::is_same_v<T, double>) {
              out += format_number(v);
            } else {
              out += std::to_string(v);
            }
          },
          row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_reports(const std::filesystem::path& out_dir, const std::vector<ReportTable>& tables,
                   RunMetadata meta) {
  // Render everything before touching the filesystem.
  std::vector<std::pair<std::filesystem::path, std::string>> files;
  for (const auto& t : tables) {
    files.emplace_back(out_dir / (t.name + ".csv"), to_csv(t));
    meta.outputs.push_back(t.name + ".csv");
  }

  nlohmann::json j = {
      {"engine", "ara"},
      {"engine_version", ARA_VERSION},
      {"command", meta.command},
      {"config", meta.config_path},
      {"seed", meta.seed},
      {"k_draws", meta.k_draws},
      {"m_inner", meta.m_inner},
      {"n_samples", meta.n_samples},
      {"threads", meta.threads},
      {"wall_clock_seconds", meta.wall_clock_seconds},
      {"outputs", meta.outputs},
  };

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw ConfigurationError("cannot create output directory '" + out_dir.string() + "'");
  for (const auto& [path, content] : files) write_file(path, content);
  write_file(out_dir / "meta.json", j.dump(2) + "\n");
}

}  // namespace ara::cli
