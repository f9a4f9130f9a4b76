#pragma once

#include "sao/common/boundary.hpp"
#include "sao/path/bridge.hpp"

namespace sao {

/// erfc(x) exp(x^2), finite for all x below ~26.5 in magnitude on the negative side.
double erfcx(double x);

/// log E[exp(-w bL) | grid values] for a reflected path, where bL is its
/// boundary local time. Per step a -> b over dt the conditional factor is the
/// ratio of the Robin kernel to the reflected kernel,
///   (1 + E (1 - w sqrt(2 pi dt) erfcx((a + b + w dt) / sqrt(2 dt)))) / (1 + E),
/// E = exp(-2ab/dt), which becomes tanh(ab/dt) under Dirichlet. Returns -inf
/// when a Dirichlet path touches zero at a grid time.
double boundary_log_weight(const BridgePath& path, BoundaryCondition boundary);

/// Same with w replaced by scale * w (scale > 0); Dirichlet is unaffected.
double boundary_log_weight(const BridgePath& path, BoundaryCondition boundary, double scale);

}  // namespace sao
