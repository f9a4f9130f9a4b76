#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sao/trace/spectral.hpp"
#include "sao/trace/types.hpp"

namespace sao {

/// Cov[Tr e^{-sH}, Tr e^{-rH}] by the two-bridge covariance formula
///   int int P_{t,u}(x,y) E[e^{A+B+C} (e^{D} - 1)] dx dy,   t = 2s, u = 2r,
/// with independent reflected bridges X^{x,x}_t and Y^{y,y}_u on a shared
/// local-time lattice. Each replicate draws one bridge per x-node and one per
/// y-node and pairs them all, so replicates are i.i.d. copies of the full
/// quadrature sum and the standard error is taken across replicates.
CovarianceEstimate covariance_fk(double beta, BoundaryCondition boundary, double s, double r,
                                 const MCParams& mc);

/// Sample covariance of spectral traces at semigroup times (s, r) across
/// independent spectra, with a jackknife standard error.
CovarianceEstimate covariance_spectral(const EnsembleSpec& spec, double s, double r,
                                       std::size_t n_samples, std::uint64_t seed,
                                       unsigned workers = 1);

/// Same estimator on spectra the caller already holds. Requires >= 2 spectra.
CovarianceEstimate covariance_from_spectra(const std::vector<Spectrum>& spectra, double s, double r);

/// Spectral-trace variances at several semigroup times and their linear
/// extrapolation in s^{1/4} to s = 0. The extrapolation error is a jackknife
/// over spectra, so the correlation between the variance estimates is kept.
struct VarianceLimit {
  std::vector<CovarianceEstimate> variances;
  double intercept = 0.0;
  double intercept_stderr = 0.0;
  double slope = 0.0;
};

VarianceLimit variance_limit(const std::vector<Spectrum>& spectra, std::span<const double> times);

}  // namespace sao
