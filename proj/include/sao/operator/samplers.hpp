#pragma once

#include <cstddef>

#include "sao/common/boundary.hpp"
#include "sao/common/rng.hpp"
#include "sao/operator/eigensolver.hpp"
#include "sao/operator/grid.hpp"

namespace sao {

struct SpectrumOptions {
  double tolerance = 1e-8;
  bool noise = true;  // false: deterministic Airy operator
};

/// sample_noise -> assemble_operator -> eig_smallest.
Spectrum sample_spectrum(double beta, BoundaryCondition boundary, const Grid& grid, std::size_t k,
                         RngStream& rng, const SpectrumOptions& options = {});

/// The k largest eigenvalues of the Dumitriu-Edelman tridiagonal Gaussian
/// beta-ensemble of size n, mapped to the soft-edge scale
///   Lambda = n^{1/6} (2 sqrt(n) - mu / sqrt(beta)),
/// so they are returned ascending in the Airy convention.
Spectrum sample_gbe_edge(std::size_t ensemble_size, double beta, std::size_t k, RngStream& rng,
                         double tolerance = 1e-8);

}  // namespace sao
