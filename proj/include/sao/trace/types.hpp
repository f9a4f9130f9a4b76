#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace sao {

enum class TraceMethod { spectral, feynman_kac };
enum class CovarianceMethod { paired_spectral, feynman_kac_formula };

/// How the boundary term exp(-w bL) enters the bridge integrands.
///   bridge_correction: exact conditional expectation given the path's grid
///     values (Robin-to-reflected kernel ratio per step; tanh(ab/dt) under Dirichlet).
///   occupation_strip: exp(-w bL) with bL from the occupation of [0, eps);
///     under Dirichlet, the indicator that [0, eps) was never entered.
enum class BoundaryMethod { bridge_correction, occupation_strip };

std::string to_string(TraceMethod m);
std::string to_string(BoundaryMethod m);
std::string to_string(CovarianceMethod m);

/// Monte Carlo settings for the bridge-based estimators. Zero-valued
/// `x_max`, `bin_width` and `boundary_eps` select the automatic defaults.
struct MCParams {
  std::size_t paths_per_node = 256;
  double x_max = 0.0;  // default 6 sqrt(max horizon) + 2
  std::size_t nodes = 64;
  double steps_per_unit_time = 2000.0;
  double bin_width = 0.0;     // default sqrt(min horizon) / 200
  double boundary_eps = 0.0;  // default: the bin width
  BoundaryMethod boundary_method = BoundaryMethod::bridge_correction;
  bool common_random_numbers = false;
  std::uint64_t seed = 0;
  unsigned workers = 1;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  std::size_t steps_for(double horizon) const;
  double x_max_for(double max_horizon) const;
  double bin_width_for(double min_horizon) const;
  double eps_for(double bin_width) const;
};

/// Estimate of Tr[exp(-s H)] at semigroup time s.
struct TraceEstimate {
  double time = 0.0;
  double value = 0.0;
  double stderr = 0.0;
  TraceMethod method = TraceMethod::spectral;
  /// spectral: K exp(-s lambda_K), flagged not added.
  /// feynman-kac: exponential-tail estimate of the x-integral beyond x_max.
  double truncation_diagnostic = 0.0;
};

/// Estimate of Cov[Tr exp(-s H), Tr exp(-r H)] at semigroup times (s, r).
struct CovarianceEstimate {
  double time_t = 0.0;
  double time_u = 0.0;
  double value = 0.0;
  double stderr = 0.0;
  CovarianceMethod method = CovarianceMethod::paired_spectral;
};

}  // namespace sao
