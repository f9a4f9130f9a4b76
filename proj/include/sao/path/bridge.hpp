#pragma once

#include <cstddef>
#include <vector>

#include "sao/common/rng.hpp"

namespace sao {

/// A bridge sampled at times s_j = j t / N, j = 0..N.
struct BridgePath {
  double horizon = 0.0;
  std::vector<double> values;  // size N + 1

  std::size_t steps() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  double time_step() const noexcept { return horizon / static_cast<double>(steps()); }
  double time(std::size_t j) const noexcept { return static_cast<double>(j) * time_step(); }
  double start() const { return values.front(); }
  double end() const { return values.back(); }
  /// Exact time integral of the piecewise-linear interpolant.
  double integral() const;
};

/// Standard Brownian bridge from x to y over [0, t], sampled exactly at the
/// grid times by sequential Gaussian conditioning.
BridgePath sample_free_bridge(double x, double y, double t, std::size_t steps, RngStream& rng);

/// Reflected Brownian motion on [0, inf) conditioned on X(0) = X(t) = x.
///
/// The Markov bridge transition from v at time s to the next grid time has
/// density proportional to Pi(dt; v, z) Pi(t - s - dt; z, x) on z >= 0, with
/// Pi(r; a, b) = (phi_r(a - b) + phi_r(a + b)). Because Pi(r; |z|, x) is even
/// in z, this is the law of |Z| where Z follows the two-component Gaussian
/// mixture phi_dt(z - v) (phi_r'(z - x) + phi_r'(z + x)); both components are
/// sampled exactly, so no rejection step is needed.
BridgePath sample_reflected_bridge(double x, double t, std::size_t steps, RngStream& rng);

}  // namespace sao
