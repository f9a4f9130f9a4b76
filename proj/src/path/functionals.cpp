#include "sao/path/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace sao {

double PathFunctionals::exp_B() const {
  if (dirichlet) return boundary_hit ? 0.0 : 1.0;
  return std::exp(B);
}

double PathFunctionals::exp_ABC() const {
  if (dirichlet && boundary_hit) return 0.0;
  return std::exp(A + B + C);
}

PathFunctionals functionals(const BridgePath& path_x, const BridgePath& path_y,
                            const LocalTimeField& local_x, const LocalTimeField& local_y,
                            double boundary_x, double boundary_y, double beta,
                            BoundaryCondition boundary) {
  if (!local_x.same_lattice(local_y)) {
    throw std::invalid_argument("functionals: local-time fields use different lattices");
  }
  if (!(beta > 0.0)) throw std::invalid_argument("functionals: beta must be positive");
  PathFunctionals f;
  f.t = path_x.horizon;
  f.u = path_y.horizon;
  f.x = path_x.start();
  f.y = path_y.start();
  f.beta = beta;
  // <L, V> equals the time integral of the path by the occupation identity.
  f.A = -0.5 * (path_x.integral() + path_y.integral());
  f.C = (local_x.squared_norm() + local_y.squared_norm()) / (2.0 * beta);
  f.D = inner_product(local_x, local_y) / beta;
  f.dirichlet = boundary.is_dirichlet();
  if (f.dirichlet) {
    f.boundary_hit = boundary_x > 0.0 || boundary_y > 0.0;
  } else {
    f.B = -boundary.w() * (boundary_x + boundary_y);
  }
  return f;
}

}  // namespace sao
