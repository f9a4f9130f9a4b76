#include "sao/trace/covariance.hpp"

#include <cmath>
#include <stdexcept>

#include "bridge_summary.hpp"
#include "sao/common/parallel.hpp"
#include "sao/common/stats.hpp"
#include "sao/trace/kernel.hpp"

namespace sao {

CovarianceEstimate covariance_fk(double beta, BoundaryCondition boundary, double s, double r,
                                 const MCParams& mc) {
  if (!(beta > 0.0)) throw std::invalid_argument("covariance_fk: beta must be positive");
  if (!(s > 0.0) || !(r > 0.0)) throw std::invalid_argument("covariance_fk: times must be positive");
  mc.validate();

  const double t = 2.0 * s;
  const double u = 2.0 * r;
  const auto quad = detail::trapezoid(mc.x_max_for(std::max(t, u)), mc.nodes);
  detail::BridgeSettings cfg_t;
  cfg_t.bin_width = mc.bin_width_for(std::min(t, u));
  cfg_t.eps = mc.eps_for(cfg_t.bin_width);
  cfg_t.beta = beta;
  cfg_t.boundary = boundary;
  cfg_t.method = mc.boundary_method;
  detail::BridgeSettings cfg_u = cfg_t;
  cfg_t.steps = mc.steps_for(t);
  cfg_u.steps = mc.steps_for(u);
  const std::size_t Q = mc.nodes;
  std::vector<double> wx(Q), wy(Q);
  for (std::size_t q = 0; q < Q; ++q) {
    wx[q] = quad.weights[q] * kernel_prefactor(t, quad.nodes[q]);
    wy[q] = quad.weights[q] * kernel_prefactor(u, quad.nodes[q]);
  }

  const auto replicates = ordered_map(mc.paths_per_node, mc.workers, [&](std::size_t i) {
    std::vector<detail::BridgeSummary> xs, ys;
    xs.reserve(Q);
    ys.reserve(Q);
    for (std::size_t q = 0; q < Q; ++q) {
      const std::size_t node = mc.common_random_numbers ? 0 : q;
      RngStream rx(derive_seed(mc.seed, "cov-fk-x", node, i));
      xs.push_back(detail::summarize_bridge(quad.nodes[q], t, cfg_t, rx));
      RngStream ry(derive_seed(mc.seed, "cov-fk-y", node, i));
      ys.push_back(detail::summarize_bridge(quad.nodes[q], u, cfg_u, ry));
    }
    double total = 0.0;
    for (std::size_t a = 0; a < Q; ++a) {
      if (xs[a].log_weight == -INFINITY) continue;
      for (std::size_t b = 0; b < Q; ++b) {
        if (ys[b].log_weight == -INFINITY || !xs[a].local.overlaps(ys[b].local)) continue;
        const double d = inner_product(xs[a].local, ys[b].local) / beta;
        if (d == 0.0) continue;
        total += wx[a] * wy[b] * std::exp(xs[a].log_weight + ys[b].log_weight) * std::expm1(d);
      }
    }
    return total;
  });

  const auto m = stats::mean_stderr(replicates);
  return {s, r, m.mean, m.stderr, CovarianceMethod::feynman_kac_formula};
}

namespace {

std::vector<double> traces_at(const std::vector<Spectrum>& spectra, double s) {
  std::vector<double> out(spectra.size());
  for (std::size_t i = 0; i < spectra.size(); ++i) out[i] = trace_spectral(spectra[i], s).value;
  return out;
}

}  // namespace

CovarianceEstimate covariance_from_spectra(const std::vector<Spectrum>& spectra, double s, double r) {
  if (spectra.size() < 2) throw std::invalid_argument("covariance_spectral: need n_samples >= 2");
  const auto a = traces_at(spectra, s);
  const auto b = traces_at(spectra, r);
  const auto jk = stats::jackknife_covariance(a, b);
  return {s, r, jk.value, jk.stderr, CovarianceMethod::paired_spectral};
}

CovarianceEstimate covariance_spectral(const EnsembleSpec& spec, double s, double r,
                                       std::size_t n_samples, std::uint64_t seed, unsigned workers) {
  if (n_samples < 2) throw std::invalid_argument("covariance_spectral: need n_samples >= 2");
  return covariance_from_spectra(sample_spectra(spec, n_samples, seed, "cov-spectral", workers), s, r);
}

VarianceLimit variance_limit(const std::vector<Spectrum>& spectra, std::span<const double> times) {
  if (times.size() < 2) throw std::invalid_argument("variance_limit: need at least two times");
  if (spectra.size() < 3) throw std::invalid_argument("variance_limit: need at least three spectra");
  VarianceLimit out;
  std::vector<double> abscissa(times.size()), full(times.size());
  std::vector<std::vector<double>> loo(times.size());
  for (std::size_t j = 0; j < times.size(); ++j) {
    const auto tr = traces_at(spectra, times[j]);
    const auto jk = stats::jackknife_covariance(tr, tr);
    out.variances.push_back({times[j], times[j], jk.value, jk.stderr, CovarianceMethod::paired_spectral});
    abscissa[j] = std::pow(times[j], 0.25);
    full[j] = jk.value;
    loo[j] = stats::leave_one_out_covariances(tr, tr);
  }
  const auto fit = stats::linear_fit(abscissa, full);
  out.intercept = fit.intercept;
  out.slope = fit.slope;
  std::vector<double> ys(times.size());
  const auto jk = stats::jackknife(spectra.size(), fit.intercept, [&](std::size_t i) {
    for (std::size_t j = 0; j < times.size(); ++j) ys[j] = loo[j][i];
    return stats::linear_fit(abscissa, ys).intercept;
  });
  out.intercept_stderr = jk.stderr;
  return out;
}

}  // namespace sao
