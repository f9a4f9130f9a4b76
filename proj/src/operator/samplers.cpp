#include "sao/operator/samplers.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sao/operator/tridiagonal.hpp"

namespace sao {

Spectrum sample_spectrum(double beta, BoundaryCondition boundary, const Grid& grid, std::size_t k,
                         RngStream& rng, const SpectrumOptions& options) {
  if (!(beta > 0.0)) throw std::invalid_argument("sample_spectrum: beta must be positive");
  const NoiseIncrements noise =
      options.noise ? sample_noise(grid, beta, rng) : NoiseIncrements::zeros(grid, beta);
  const auto op = assemble_operator(grid, noise, beta, boundary, rng.seed());
  return eig_smallest(op, k, options.tolerance);
}

Spectrum sample_gbe_edge(std::size_t ensemble_size, double beta, std::size_t k, RngStream& rng,
                         double tolerance) {
  if (!(beta > 0.0)) throw std::invalid_argument("sample_gbe_edge: beta must be positive");
  if (k < 1 || ensemble_size < k) {
    throw std::invalid_argument("sample_gbe_edge: need ensemble_size >= k >= 1");
  }
  const std::size_t n = ensemble_size;
  const double nd = static_cast<double>(n);
  const double scale = std::pow(nd, 1.0 / 6.0);
  const double edge = 2.0 * std::sqrt(nd);
  const double inv_sqrt_beta = 1.0 / std::sqrt(beta);

  // M = n^{1/6} (2 sqrt(n) I - H / sqrt(beta)); the smallest eigenvalues of M
  // are the edge-rescaled largest eigenvalues of H.
  std::vector<double> diagonal(n);
  std::vector<double> off(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    diagonal[i] = scale * (edge - std::sqrt(2.0) * rng.normal() * inv_sqrt_beta);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double dof = beta * static_cast<double>(n - 1 - i);
    off[i] = -scale * rng.chi(dof) * inv_sqrt_beta;
  }

  Spectrum spec;
  spec.eigenvalues = smallest_eigenvalues(diagonal, off, k, tolerance);
  spec.metadata.source = "gbe-edge";
  spec.metadata.beta = beta;
  spec.metadata.seed = rng.seed();
  spec.metadata.ensemble_size = n;
  spec.metadata.tolerance = tolerance;
  return spec;
}

}  // namespace sao
