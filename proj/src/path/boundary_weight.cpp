#include "sao/path/boundary_weight.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sao {

double erfcx(double x) {
  if (x < 25.0) return std::exp(x * x) * std::erfc(x);
  // Continued fraction 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), evaluated bottom-up.
  double f = x;
  for (int k = 60; k >= 1; --k) f = x + 0.5 * k / f;
  return 1.0 / (std::sqrt(std::numbers::pi) * f);
}

namespace {

double step_log_factor(double a, double b, double dt, BoundaryCondition boundary, double scale) {
  const double e = std::exp(-2.0 * a * b / dt);
  if (boundary.is_dirichlet()) {
    const double p = -std::expm1(-2.0 * a * b / dt) / (1.0 + e);  // tanh(ab/dt)
    return p > 0.0 ? std::log(p) : -INFINITY;
  }
  const double w = scale * boundary.w();
  if (w == 0.0) return 0.0;
  const double z = (a + b + w * dt) / std::sqrt(2.0 * dt);
  const double robin = 1.0 - w * std::sqrt(2.0 * std::numbers::pi * dt) * erfcx(z);
  return std::log1p(e * robin) - std::log1p(e);
}

}  // namespace

double boundary_log_weight(const BridgePath& path, BoundaryCondition boundary, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("boundary_log_weight: scale must be positive");
  if (path.steps() == 0) throw std::invalid_argument("boundary_log_weight: empty path");
  const double dt = path.time_step();
  double total = 0.0;
  for (std::size_t j = 0; j < path.steps(); ++j) {
    total += step_log_factor(path.values[j], path.values[j + 1], dt, boundary, scale);
    if (total == -INFINITY) break;
  }
  return total;
}

double boundary_log_weight(const BridgePath& path, BoundaryCondition boundary) {
  return boundary_log_weight(path, boundary, 1.0);
}

}  // namespace sao
