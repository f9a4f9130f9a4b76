#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sao/common/boundary.hpp"
#include "sao/operator/grid.hpp"

namespace sao {

struct OperatorProvenance {
  double length = 0.0;
  double spacing = 0.0;
  double beta = 0.0;
  std::optional<std::uint64_t> seed;  // empty for hand-built or noiseless operators
};

/// Symmetric tridiagonal finite-difference discretization of
/// -f'' + (x + (2/sqrt(beta)) W'(x)) f on (0, L].
struct TridiagonalOperator {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size diagonal.size() - 1
  BoundaryCondition boundary = BoundaryCondition::dirichlet();
  OperatorProvenance provenance;

  std::size_t size() const noexcept { return diagonal.size(); }
};

/// Interior rows: d_i = 2/h^2 + x_i + (2/sqrt(beta)) dW_i / h, e_i = -1/h^2.
/// Dirichlet closes the first row against a zero ghost value at x = 0; Robin
/// replaces 2/h^2 in the first row by 1/h^2 + w/h. The right end is Dirichlet.
TridiagonalOperator assemble_operator(const Grid& grid, const NoiseIncrements& noise, double beta,
                                      BoundaryCondition boundary,
                                      std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace sao
