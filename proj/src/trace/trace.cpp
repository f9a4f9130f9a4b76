#include "sao/trace/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bridge_summary.hpp"
#include "sao/common/parallel.hpp"
#include "sao/common/stats.hpp"
#include "sao/trace/kernel.hpp"

namespace sao {

std::string to_string(TraceMethod m) {
  return m == TraceMethod::spectral ? "spectral" : "feynman-kac";
}

std::string to_string(BoundaryMethod m) {
  return m == BoundaryMethod::bridge_correction ? "bridge" : "strip";
}

std::string to_string(CovarianceMethod m) {
  return m == CovarianceMethod::paired_spectral ? "paired-spectral" : "feynman-kac-formula";
}

void MCParams::validate() const {
  if (paths_per_node < 1) throw std::invalid_argument("mc.paths must be >= 1");
  if (nodes < 2) throw std::invalid_argument("mc.nodes must be >= 2");
  if (x_max < 0.0 || !std::isfinite(x_max)) throw std::invalid_argument("mc.x_max must be > 0 (or 0 for auto)");
  if (!(steps_per_unit_time > 0.0)) throw std::invalid_argument("path.steps_per_unit_time must be > 0");
  if (bin_width < 0.0) throw std::invalid_argument("path.delta must be > 0 (or 0 for auto)");
  if (boundary_eps < 0.0) throw std::invalid_argument("path.epsilon must be > 0 (or 0 for auto)");
}

std::size_t MCParams::steps_for(double horizon) const {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(steps_per_unit_time * horizon - 1e-9)));
}

double MCParams::x_max_for(double max_horizon) const {
  return x_max > 0.0 ? x_max : 6.0 * std::sqrt(max_horizon) + 2.0;
}

double MCParams::bin_width_for(double min_horizon) const {
  return bin_width > 0.0 ? bin_width : std::sqrt(min_horizon) / 200.0;
}

double MCParams::eps_for(double width) const { return boundary_eps > 0.0 ? boundary_eps : width; }

std::vector<Spectrum> sample_spectra(const EnsembleSpec& spec, std::size_t n, std::uint64_t seed,
                                     std::string_view tag, unsigned workers) {
  return ordered_map(n, workers, [&](std::size_t i) {
    RngStream rng(derive_seed(seed, tag, 0, i));
    return sample_spectrum(spec.beta, spec.boundary, spec.grid, spec.k, rng, spec.options);
  });
}

TraceEstimate trace_spectral(const Spectrum& spectrum, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("trace_spectral: time must be positive");
  if (spectrum.eigenvalues.empty()) throw std::invalid_argument("trace_spectral: empty spectrum");
  TraceEstimate est;
  est.time = s;
  est.method = TraceMethod::spectral;
  double sum = 0.0;
  for (double lambda : spectrum.eigenvalues) sum += std::exp(-s * lambda);
  est.value = sum;
  est.truncation_diagnostic =
      static_cast<double>(spectrum.size()) * std::exp(-s * spectrum.highest());
  return est;
}

TraceEstimate mean_spectral_trace(const std::vector<Spectrum>& spectra, double s) {
  if (spectra.empty()) throw std::invalid_argument("mean_spectral_trace: no spectra");
  std::vector<double> values(spectra.size());
  double diag = 0.0;
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    const auto est = trace_spectral(spectra[i], s);
    values[i] = est.value;
    diag = std::max(diag, est.truncation_diagnostic);
  }
  const auto m = stats::mean_stderr(values);
  return {s, m.mean, m.stderr, TraceMethod::spectral, diag};
}

TraceEstimate trace_fk(double beta, BoundaryCondition boundary, double s, const MCParams& mc) {
  if (!(beta > 0.0)) throw std::invalid_argument("trace_fk: beta must be positive");
  if (!(s > 0.0)) throw std::invalid_argument("trace_fk: time must be positive");
  mc.validate();

  const double t = 2.0 * s;
  const auto quad = detail::trapezoid(mc.x_max_for(t), mc.nodes);
  detail::BridgeSettings cfg;
  cfg.steps = mc.steps_for(t);
  cfg.bin_width = mc.bin_width_for(t);
  cfg.eps = mc.eps_for(cfg.bin_width);
  cfg.beta = beta;
  cfg.boundary = boundary;
  cfg.method = mc.boundary_method;
  std::vector<double> prefactor(mc.nodes);
  for (std::size_t q = 0; q < mc.nodes; ++q) prefactor[q] = kernel_prefactor(t, quad.nodes[q]);

  struct Replicate {
    double integral = 0.0;
    double last_node = 0.0;
  };
  const auto replicates = ordered_map(mc.paths_per_node, mc.workers, [&](std::size_t i) {
    Replicate rep;
    for (std::size_t q = 0; q < mc.nodes; ++q) {
      RngStream rng(derive_seed(mc.seed, "trace-fk", mc.common_random_numbers ? 0 : q, i));
      const auto b = detail::summarize_bridge(quad.nodes[q], t, cfg, rng);
      const double integrand = prefactor[q] * std::exp(b.log_weight);
      rep.integral += quad.weights[q] * integrand;
      if (q + 1 == mc.nodes) rep.last_node = integrand;
    }
    return rep;
  });

  std::vector<double> totals(replicates.size());
  double last = 0.0;
  for (std::size_t i = 0; i < replicates.size(); ++i) {
    totals[i] = replicates[i].integral;
    last += replicates[i].last_node;
  }
  last /= static_cast<double>(replicates.size());
  const auto m = stats::mean_stderr(totals);
  TraceEstimate est;
  est.time = s;
  est.value = m.mean;
  est.stderr = m.stderr;
  est.method = TraceMethod::feynman_kac;
  // The integrand decays like exp(-x t / 2) beyond x_max.
  est.truncation_diagnostic = last * 2.0 / t;
  return est;
}

}  // namespace sao
