#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sao/common/boundary.hpp"
#include "sao/rigidity/configuration.hpp"
#include "sao/rigidity/experiment.hpp"
#include "sao/trace/probes.hpp"
#include "sao/trace/spectral.hpp"
#include "sao/trace/types.hpp"

namespace sao::exp {

/// Configuration error tied to one key ("section.name", or "name" at top level).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct ExperimentConfig {
  double beta = 2.0;
  BoundaryCondition boundary = BoundaryCondition::dirichlet();
  std::uint64_t seed = 0;
  unsigned workers = 1;
  bool noise = true;

  double length = 10.0;        // grid.L; parse_config defaults it from the window
  std::size_t points = 10000;  // grid.n

  std::size_t k = 50;
  double tolerance = 1e-8;

  double steps_per_unit_time = 2000.0;
  double delta = 0.0;    // 0: automatic
  double epsilon = 0.0;  // 0: automatic
  BoundaryMethod boundary_method = BoundaryMethod::bridge_correction;  // path.boundary: bridge | strip

  std::size_t paths = 256;
  std::size_t nodes = 64;
  double x_max = 0.0;  // 0: automatic
  bool crn = false;
  double exp_clip = std::numeric_limits<double>::infinity();

  std::size_t spectral_samples = 200;

  std::vector<double> t{1.0};
  std::vector<double> u{1.0};
  std::vector<double> x{1.0};
  std::vector<double> y{1.0};

  double rigidity_t0 = 1.0;
  double rigidity_gamma = 0.8;
  std::size_t rigidity_candidates = 60;
  std::size_t rigidity_depth = 0;
  std::size_t rigidity_replicates = 500;
  std::size_t rigidity_reference_samples = 2000;
  WindowSpec rigidity_window = WindowSpec::parse("-inf:-1");

  EnsembleSpec ensemble() const;
  MCParams mc() const;
  ProbeOptions probe_options() const;
  RigidityConfig rigidity() const;

  /// Throws ConfigError naming the first key that violates a constraint.
  void validate() const;
};

/// 10 + max(0, -2 inf B), with inf B the lowest finite endpoint of the window.
double default_length(const WindowSpec& window);

/// Parses an INI-style document: top-level keys, then [grid], [eigen], [path],
/// [mc], [spectral], [times] and [rigidity] sections. Comments are full lines
/// starting with ';' or '#'. Values may be double-quoted. Lists are
/// comma-separated.
ExperimentConfig parse_config(std::string_view text);

/// Canonical document with every field written out; parse_config(snapshot(c))
/// reproduces c exactly.
std::string snapshot(const ExperimentConfig& config);

/// Reads a config document or a run record (its embedded snapshot).
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace sao::exp
