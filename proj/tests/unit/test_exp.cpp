#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sao/exp/commands.hpp"
#include "sao/exp/config.hpp"
#include "sao/exp/output.hpp"

using namespace sao;
using namespace sao::exp;

namespace {

std::string key_of_error(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

ExperimentConfig tiny(std::string extra = "") {
  return parse_config(
      "beta = 2\nw = inf\nseed = 7\n"
      "[grid]\nL = 8\nn = 400\n"
      "[eigen]\nk = 8\n"
      "[path]\nsteps_per_unit_time = 100\n"
      "[mc]\npaths = 8\nnodes = 6\n"
      "[spectral]\nsamples = 20\n"
      "[times]\nt = 1, 0.5\nu = 1\nx = 1\ny = 1\n"
      "[rigidity]\nreplicates = 10\nreference_samples = 20\ncandidates = 8\n" +
      extra);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("minimal document fills the documented defaults") {
  const auto c = parse_config("beta = 2\nw = \"inf\"\nseed = 7\n");
  CHECK(c.beta == 2.0);
  CHECK(c.boundary.is_dirichlet());
  CHECK(c.seed == 7);
  CHECK(c.workers == 1);
  CHECK(c.noise);
  CHECK(c.points == 10000);
  CHECK(c.k == 50);
  CHECK(c.tolerance == 1e-8);
  CHECK(c.steps_per_unit_time == 2000.0);
  CHECK(c.delta == 0.0);
  CHECK(c.epsilon == 0.0);
  CHECK(c.boundary_method == BoundaryMethod::bridge_correction);
  CHECK(c.paths == 256);
  CHECK(c.nodes == 64);
  CHECK(c.spectral_samples == 200);
  CHECK(c.rigidity_t0 == 1.0);
  CHECK(c.rigidity_gamma == 0.8);
  CHECK(c.rigidity_candidates == 60);
  CHECK(c.rigidity_replicates == 500);
  CHECK(c.rigidity_window.to_string() == WindowSpec::parse("-inf:-1").to_string());
  // The default window reaches down to -1, so the interval grows by 2.
  CHECK(c.length == 12.0);
  CHECK(default_length(WindowSpec::parse("-3:0")) == 16.0);
  CHECK(default_length(WindowSpec::parse("1:2")) == 10.0);
  // Every default is echoed into the snapshot.
  const auto snap = snapshot(c);
  for (const char* key : {"beta", "steps_per_unit_time", "paths", "samples", "replicates", "window", "boundary"})
    CHECK(snap.find(key) != std::string::npos);
}

TEST_CASE("configuration errors name the offending key") {
  CHECK(key_of_error("beta = -1\n") == "beta");
  CHECK(key_of_error("foo = 1\n") == "foo");
  CHECK(key_of_error("[grid]\nn = many\n") == "grid.n");
  CHECK(key_of_error("[mc]\nnodes = 1\n") == "mc.nodes");
  CHECK(key_of_error("w = sideways\n") == "w");
  CHECK(key_of_error("[path]\nboundary = both\n") == "path.boundary");
  CHECK(key_of_error("[rigidity]\nwindow = 0:inf\n") == "rigidity.window");
  CHECK(key_of_error("[rigidity]\ngamma = 1.5\n") == "rigidity.gamma");
  CHECK(key_of_error("[times]\nt = 1, -2\n") == "times.t");
}

TEST_CASE("snapshot round-trips, including the Dirichlet token") {
  const auto c = tiny();
  CHECK(snapshot(parse_config(snapshot(c))) == snapshot(c));
  CHECK(snapshot(c).find("w = inf") != std::string::npos);
  const auto robin = parse_config("w = 0.25\n[path]\nboundary = strip\n");
  const auto again = parse_config(snapshot(robin));
  CHECK_FALSE(again.boundary.is_dirichlet());
  CHECK(again.boundary.w() == 0.25);
  CHECK(again.boundary_method == BoundaryMethod::occupation_strip);
}

TEST_CASE("tables: headers, width checks and LF endings") {
  Table t{"results.csv", {"a", "b"}, {}};
  t.add_row({"1", "2"});
  CHECK_THROWS_WITH(t.add_row({"1"}), "table row width does not match header");
  CHECK(t.to_csv() == "a,b\n1,2\n");
}

TEST_CASE("every subcommand runs and its payload is reproducible") {
  const auto c = tiny();
  for (const auto& sub : subcommands()) {
    CAPTURE(sub);
    const auto a = run_command(sub, c);
    const auto b = run_command(sub, c);
    REQUIRE_FALSE(a.tables.empty());
    CHECK(a.tables.front().file == "results.csv");
    CHECK_FALSE(a.tables.front().rows.empty());
    CHECK(a.payload_hash() == b.payload_hash());
    for (std::size_t i = 0; i < a.tables.size(); ++i) CHECK(a.tables[i].to_csv() == b.tables[i].to_csv());
    const auto j = a.to_json();
    CHECK(j["schema_version"] == 1);
    CHECK(j["subcommand"] == sub);
    CHECK(j["payload_hash"] == hex64(a.payload_hash()));
  }
  CHECK_THROWS_AS(run_command("bogus", c), std::invalid_argument);
}

TEST_CASE("results do not depend on the worker count") {
  auto c = tiny();
  const auto one = run_command("trace", c);
  c.workers = 3;
  const auto three = run_command("trace", c);
  CHECK(one.tables.front().to_csv() == three.tables.front().to_csv());
}

TEST_CASE("sample-spectrum with a fixed seed writes byte-identical tables") {
  const auto dir = std::filesystem::temp_directory_path() / "sao-test-exp";
  std::filesystem::remove_all(dir);
  const auto c = tiny();
  write_run(run_command("sample-spectrum", c), dir / "a");
  write_run(run_command("sample-spectrum", c), dir / "b");
  CHECK(slurp(dir / "a" / "results.csv") == slurp(dir / "b" / "results.csv"));
  CHECK(slurp(dir / "a" / "results.csv").find('\r') == std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("a run record's embedded config reproduces its payload hash") {
  const auto dir = std::filesystem::temp_directory_path() / "sao-test-rerun";
  std::filesystem::remove_all(dir);
  const auto first = run_command("covariance", tiny());
  write_run(first, dir);
  const auto record = nlohmann::json::parse(slurp(dir / "run.json"));
  CHECK(record["artifact"] == "sao-lab");
  CHECK(record["version"] == artifact_version());
  const auto reloaded = load_config(dir / "run.json");
  const auto second = run_command("covariance", reloaded);
  CHECK(second.payload_hash() == first.payload_hash());
  CHECK(record["payload_hash"] == hex64(second.payload_hash()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("variance-limit ends with an extrapolation row") {
  const auto rec = run_command("variance-limit", tiny());
  const auto& rows = rec.tables.front().rows;
  REQUIRE(rows.size() >= 3);
  CHECK(rows.back().front() == "extrapolation");
  CHECK(rec.diagnostics.contains("reference_limit"));
  CHECK(rec.diagnostics["reference_limit"].get<double>() == doctest::Approx(1.0 / (4.0 * std::numbers::pi)));
}
