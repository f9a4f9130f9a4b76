#pragma once

#include <cmath>
#include <vector>

#include "sao/common/boundary.hpp"
#include "sao/common/rng.hpp"
#include "sao/path/boundary_weight.hpp"
#include "sao/path/bridge.hpp"
#include "sao/path/local_time.hpp"
#include "sao/trace/types.hpp"

namespace sao::detail {

/// What the trace and covariance integrands need from one reflected bridge.
struct BridgeSummary {
  LocalTimeField local;
  double integral = 0.0;        // int_0^t X(s) ds
  /// log of exp(-int X/2 + ||L||^2/2beta) times the boundary factor; -inf when killed.
  double log_weight = 0.0;
};

struct BridgeSettings {
  std::size_t steps = 1;
  double bin_width = 0.0;
  double eps = 0.0;
  double beta = 0.0;
  BoundaryCondition boundary = BoundaryCondition::dirichlet();
  BoundaryMethod method = BoundaryMethod::bridge_correction;
};

/// log of the boundary factor: exp(-w bL), or its conditional expectation.
inline double boundary_log_factor(const BridgePath& path, const BridgeSettings& cfg, double scale = 1.0) {
  if (cfg.method == BoundaryMethod::bridge_correction) return boundary_log_weight(path, cfg.boundary, scale);
  const double bl = boundary_local_time(path, cfg.eps);
  if (cfg.boundary.is_dirichlet()) return bl > 0.0 ? -INFINITY : 0.0;
  return -scale * cfg.boundary.w() * bl;
}

inline BridgeSummary summarize_bridge(double x, double horizon, const BridgeSettings& cfg, RngStream& rng) {
  const BridgePath path = sample_reflected_bridge(x, horizon, cfg.steps, rng);
  BridgeSummary s{local_time(path, cfg.bin_width), path.integral(), 0.0};
  const double b = boundary_log_factor(path, cfg);
  s.log_weight = b == -INFINITY ? -INFINITY : b - 0.5 * s.integral + s.local.squared_norm() / (2.0 * cfg.beta);
  return s;
}

/// Trapezoid nodes and weights on [0, x_max].
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline Quadrature trapezoid(double x_max, std::size_t count) {
  Quadrature q{std::vector<double>(count), std::vector<double>(count)};
  const double h = x_max / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    q.nodes[i] = static_cast<double>(i) * h;
    q.weights[i] = (i == 0 || i + 1 == count) ? 0.5 * h : h;
  }
  return q;
}

}  // namespace sao::detail
