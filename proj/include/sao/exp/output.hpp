#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace sao::exp {

inline constexpr int kSchemaVersion = 1;

/// A delimited table; every header carries its unit in brackets.
struct Table {
  std::string file;  // e.g. "results.csv"
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  /// Comma-separated, LF line endings, header first.
  std::string to_csv() const;
};

struct RunRecord {
  std::string subcommand;
  std::string config_snapshot;
  std::vector<Table> tables;  // tables.front() is results.csv
  nlohmann::json diagnostics = nlohmann::json::object();
  std::string started_at;
  std::string finished_at;

  /// FNV-1a over subcommand, snapshot and table bytes; timestamps excluded.
  std::uint64_t payload_hash() const;
  nlohmann::json to_json() const;
};

std::string artifact_version();
std::string utc_timestamp();
std::string hex64(std::uint64_t v);

/// Writes every table and run.json into `dir` (created if missing).
void write_run(const RunRecord& record, const std::filesystem::path& dir);

/// Writes error.json into `dir` when it can be created; never throws.
void write_error(const std::filesystem::path& dir, const nlohmann::json& error) noexcept;

}  // namespace sao::exp
