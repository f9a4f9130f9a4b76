#include "sao/exp/output.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace sao::exp {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv(std::uint64_t& h, const std::string& bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  // Field separator so ("ab","c") and ("a","bc") differ.
  h ^= 0xff;
  h *= kFnvPrime;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << bytes;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::logic_error("table row width does not match header");
  rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
  std::string out;
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return out;
}

std::uint64_t RunRecord::payload_hash() const {
  std::uint64_t h = kFnvOffset;
  fnv(h, subcommand);
  fnv(h, config_snapshot);
  for (const auto& t : tables) {
    fnv(h, t.file);
    fnv(h, t.to_csv());
  }
  return h;
}

nlohmann::json RunRecord::to_json() const {
  nlohmann::json outputs = nlohmann::json::array();
  for (const auto& t : tables) {
    std::uint64_t h = kFnvOffset;
    fnv(h, t.to_csv());
    outputs.push_back({{"file", t.file}, {"rows", t.rows.size()}, {"columns", t.columns}, {"fnv1a64", hex64(h)}});
  }
  return {
      {"schema_version", kSchemaVersion},
      {"artifact", "sao-lab"},
      {"version", artifact_version()},
      {"subcommand", subcommand},
      {"config", {{"snapshot", config_snapshot}}},
      {"started_at", started_at},
      {"finished_at", finished_at},
      {"outputs", outputs},
      {"diagnostics", diagnostics},
      {"payload_hash", hex64(payload_hash())},
  };
}

std::string artifact_version() { return SAO_VERSION; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void write_run(const RunRecord& record, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& t : record.tables) write_file(dir / t.file, t.to_csv());
  write_file(dir / "run.json", record.to_json().dump(2) + "\n");
}

void write_error(const std::filesystem::path& dir, const nlohmann::json& error) noexcept {
  try {
    std::filesystem::create_directories(dir);
    write_file(dir / "error.json", error.dump(2) + "\n");
  } catch (...) {
  }
}

}  // namespace sao::exp
