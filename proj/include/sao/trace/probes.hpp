#pragma once

#include <cstddef>
#include <limits>

#include "sao/common/boundary.hpp"
#include "sao/trace/types.hpp"

namespace sao {

struct MomentEstimate {
  double value = 0.0;
  double stderr = 0.0;
};

/// Monte Carlo moments of the covariance-integrand terms at one (t, u, x, y).
/// Here t and u are bridge horizons, not semigroup times.
struct ProbeRecord {
  double t = 0.0, u = 0.0, x = 0.0, y = 0.0;
  std::size_t pairs = 0;
  MomentEstimate potential;          // E[e^{4A}]^{1/4}
  MomentEstimate boundary;           // E[e^{4B}]
  MomentEstimate self_intersection;  // E[e^{4C}]
  MomentEstimate gaussian_term;      // E[(e^D - 1)^4]^{1/4}
  MomentEstimate vanishing_term;     // E[(e^D - 1)^8]^{1/8}
  /// Samples whose exponent exceeded the clip level (or overflowed).
  std::size_t overflow_count = 0;
};

struct ProbeOptions {
  /// Exponent arguments above this are clipped and counted; default none.
  double exp_clip = std::numeric_limits<double>::infinity();
};

ProbeRecord moment_probe(double beta, BoundaryCondition boundary, double t, double u, double x,
                         double y, const MCParams& mc, const ProbeOptions& options = {});

}  // namespace sao
