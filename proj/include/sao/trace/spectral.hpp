#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sao/common/boundary.hpp"
#include "sao/operator/eigensolver.hpp"
#include "sao/operator/grid.hpp"
#include "sao/operator/samplers.hpp"
#include "sao/trace/types.hpp"

namespace sao {

/// Everything needed to draw independent spectra of one discretized operator.
struct EnsembleSpec {
  double beta = 2.0;
  BoundaryCondition boundary = BoundaryCondition::dirichlet();
  Grid grid = build_grid(10.0, 10000);
  std::size_t k = 50;
  SpectrumOptions options;
};

/// n independent spectra; sample i uses the stream derive_seed(seed, tag, 0, i).
std::vector<Spectrum> sample_spectra(const EnsembleSpec& spec, std::size_t n, std::uint64_t seed,
                                     std::string_view tag, unsigned workers = 1);

/// sum_k exp(-s lambda_k) over the resolved eigenvalues (semigroup time s).
TraceEstimate trace_spectral(const Spectrum& spectrum, double s);

/// Ensemble mean of trace_spectral with its standard error.
TraceEstimate mean_spectral_trace(const std::vector<Spectrum>& spectra, double s);

/// Tr[exp(-s H)] by the Feynman-Kac trace identity at bridge horizon t = 2s:
///   int_0^inf (1 + e^{-2x^2/t})/sqrt(2 pi t)
///       E[exp(-<L_t, V/2> + ||L_t||^2 / 2beta - w bL_t)] dx,
/// with the white noise integrated out in closed form. The x-integral is a
/// trapezoid rule on [0, x_max]; each replicate draws one reflected bridge per
/// node, and the standard error is taken across replicates.
TraceEstimate trace_fk(double beta, BoundaryCondition boundary, double s, const MCParams& mc);

}  // namespace sao
