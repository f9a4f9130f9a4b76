#pragma once

#include "sao/common/boundary.hpp"
#include "sao/path/bridge.hpp"
#include "sao/path/local_time.hpp"

namespace sao {

/// Exponent terms of the two-path covariance integrand for a pair of bridges
/// X (horizon t, start x) and Y (horizon u, start y):
///   A = -<L_X + L_Y, V/2>            potential
///   B = -w (bX + bY)                 boundary local time
///   C = (||L_X||^2 + ||L_Y||^2)/2beta self-intersection
///   D = <L_X, L_Y> / beta            mutual intersection
/// With a Dirichlet boundary B is not a number: exp(B) is the indicator that
/// neither path accumulated boundary local time.
struct PathFunctionals {
  double A = 0.0;
  double B = 0.0;  // finite part; 0 under Dirichlet
  double C = 0.0;
  double D = 0.0;
  bool dirichlet = false;
  bool boundary_hit = false;  // Dirichlet only: some boundary local time > 0

  double t = 0.0, u = 0.0, x = 0.0, y = 0.0, beta = 0.0;

  double exp_B() const;
  /// exp(A + B + C), honouring the Dirichlet indicator.
  double exp_ABC() const;
};

/// Throws std::invalid_argument when the two fields use different lattices.
PathFunctionals functionals(const BridgePath& path_x, const BridgePath& path_y,
                            const LocalTimeField& local_x, const LocalTimeField& local_y,
                            double boundary_x, double boundary_y, double beta,
                            BoundaryCondition boundary);

}  // namespace sao
