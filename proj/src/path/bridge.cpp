#include "sao/path/bridge.hpp"

#include <cmath>
#include <stdexcept>

namespace sao {

double BridgePath::integral() const {
  if (values.size() < 2) return 0.0;
  double sum = 0.5 * (values.front() + values.back());
  for (std::size_t j = 1; j + 1 < values.size(); ++j) sum += values[j];
  return sum * time_step();
}

namespace {

void check_args(double t, std::size_t steps) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("bridge: horizon must be positive");
  if (steps < 1) throw std::invalid_argument("bridge: need at least one step");
}

}  // namespace

BridgePath sample_free_bridge(double x, double y, double t, std::size_t steps, RngStream& rng) {
  check_args(t, steps);
  BridgePath path{t, std::vector<double>(steps + 1)};
  const double dt = t / static_cast<double>(steps);
  path.values[0] = x;
  double v = x;
  for (std::size_t j = 0; j + 1 < steps; ++j) {
    const double remaining = t - static_cast<double>(j) * dt;
    const double after = remaining - dt;
    const double mean = v + (y - v) * dt / remaining;
    const double sd = std::sqrt(dt * after / remaining);
    v = mean + sd * rng.normal();
    path.values[j + 1] = v;
  }
  path.values[steps] = y;
  return path;
}

BridgePath sample_reflected_bridge(double x, double t, std::size_t steps, RngStream& rng) {
  check_args(t, steps);
  if (!(x >= 0.0)) throw std::invalid_argument("sample_reflected_bridge: start must be >= 0");
  BridgePath path{t, std::vector<double>(steps + 1)};
  const double dt = t / static_cast<double>(steps);
  path.values[0] = x;
  double v = x;
  for (std::size_t j = 0; j + 1 < steps; ++j) {
    const double remaining = t - static_cast<double>(j) * dt;
    const double after = remaining - dt;
    const double sd = std::sqrt(dt * after / remaining);
    // Weight of the mirrored component relative to the direct one: exp(-2 v x / r).
    const double z = 2.0 * v * x / remaining;
    const double p_mirror = z > 40.0 ? 0.0 : 1.0 / (1.0 + std::exp(z));
    const double target = (p_mirror > 0.0 && rng.uniform() < p_mirror) ? -x : x;
    const double mean = (v * after + target * dt) / remaining;
    v = std::abs(mean + sd * rng.normal());
    path.values[j + 1] = v;
  }
  path.values[steps] = x;
  return path;
}

}  // namespace sao
