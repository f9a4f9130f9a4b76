#include "sao/operator/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>

namespace sao {

TridiagonalOperator assemble_operator(const Grid& grid, const NoiseIncrements& noise, double beta,
                                      BoundaryCondition boundary,
                                      std::optional<std::uint64_t> seed) {
  const std::size_t n = grid.points();
  if (noise.increments.size() != n) {
    throw std::invalid_argument("assemble_operator: noise length does not match grid");
  }
  if (!(beta > 0.0)) throw std::invalid_argument("assemble_operator: beta must be positive");

  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const double noise_scale = 2.0 / (std::sqrt(beta) * h);

  TridiagonalOperator op;
  op.boundary = boundary;
  op.provenance = {grid.length(), h, beta, seed};
  op.diagonal.resize(n);
  op.off_diagonal.assign(n - 1, -inv_h2);
  for (std::size_t i = 0; i < n; ++i) {
    op.diagonal[i] = 2.0 * inv_h2 + grid.node(i) + noise_scale * noise.increments[i];
  }
  if (!boundary.is_dirichlet()) {
    op.diagonal[0] += -inv_h2 + boundary.w() / h;
  }
  for (double d : op.diagonal) {
    if (!std::isfinite(d)) throw std::invalid_argument("assemble_operator: non-finite entry");
  }
  return op;
}

}  // namespace sao
