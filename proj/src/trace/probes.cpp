#include "sao/trace/probes.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sao/common/parallel.hpp"
#include "sao/common/rng.hpp"
#include "sao/common/stats.hpp"
#include "bridge_summary.hpp"
#include "sao/path/functionals.hpp"

namespace sao {

namespace {

struct PairSample {
  double e4a = 0.0, e4b = 0.0, e4c = 0.0, d4 = 0.0, d8 = 0.0;
  std::size_t overflow = 0;
};

// m^{1/p} with the delta-method standard error.
MomentEstimate root_moment(const stats::MeanEstimate& m, double p) {
  MomentEstimate out;
  if (m.mean <= 0.0) return out;
  out.value = std::pow(m.mean, 1.0 / p);
  out.stderr = out.value * m.stderr / (p * m.mean);
  return out;
}

}  // namespace

ProbeRecord moment_probe(double beta, BoundaryCondition boundary, double t, double u, double x,
                         double y, const MCParams& mc, const ProbeOptions& options) {
  if (!(beta > 0.0)) throw std::invalid_argument("moment_probe: beta must be positive");
  if (!(t > 0.0) || !(u > 0.0)) throw std::invalid_argument("moment_probe: horizons must be positive");
  if (!(x >= 0.0) || !(y >= 0.0)) throw std::invalid_argument("moment_probe: x, y must be >= 0");
  mc.validate();

  const double width = mc.bin_width_for(std::min(t, u));
  const double eps = mc.eps_for(width);
  detail::BridgeSettings cfg;
  cfg.eps = eps;
  cfg.beta = beta;
  cfg.boundary = boundary;
  cfg.method = mc.boundary_method;
  const std::size_t steps_t = mc.steps_for(t);
  const std::size_t steps_u = mc.steps_for(u);
  const double clip = options.exp_clip;

  const auto samples = ordered_map(mc.paths_per_node, mc.workers, [&](std::size_t i) {
    RngStream rx(derive_seed(mc.seed, "probe-x", 0, i));
    RngStream ry(derive_seed(mc.seed, "probe-y", 0, i));
    const auto px = sample_reflected_bridge(x, t, steps_t, rx);
    const auto py = sample_reflected_bridge(y, u, steps_u, ry);
    const auto f = functionals(px, py, local_time(px, width), local_time(py, width),
                               boundary_local_time(px, eps), boundary_local_time(py, eps), beta,
                               boundary);
    PairSample s;
    const auto guarded_exp = [&](double arg) {
      if (arg > clip) {
        ++s.overflow;
        arg = clip;
      }
      const double v = std::exp(arg);
      if (!std::isfinite(v)) ++s.overflow;
      return v;
    };
    s.e4a = guarded_exp(4.0 * f.A);
    if (mc.boundary_method == BoundaryMethod::bridge_correction) {
      s.e4b = guarded_exp(detail::boundary_log_factor(px, cfg, 4.0) + detail::boundary_log_factor(py, cfg, 4.0));
    } else {
      s.e4b = f.dirichlet ? f.exp_B() : guarded_exp(4.0 * f.B);
    }
    s.e4c = guarded_exp(4.0 * f.C);
    const double dm1 = f.D > clip ? guarded_exp(f.D) - 1.0 : std::expm1(f.D);
    const double d2 = dm1 * dm1;
    s.d4 = d2 * d2;
    s.d8 = s.d4 * s.d4;
    return s;
  });

  std::vector<double> a(samples.size()), b(samples.size()), c(samples.size()), d4(samples.size()),
      d8(samples.size());
  ProbeRecord rec;
  rec.t = t;
  rec.u = u;
  rec.x = x;
  rec.y = y;
  rec.pairs = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    a[i] = samples[i].e4a;
    b[i] = samples[i].e4b;
    c[i] = samples[i].e4c;
    d4[i] = samples[i].d4;
    d8[i] = samples[i].d8;
    rec.overflow_count += samples[i].overflow;
  }
  rec.potential = root_moment(stats::mean_stderr(a), 4.0);
  const auto mb = stats::mean_stderr(b);
  rec.boundary = {mb.mean, mb.stderr};
  const auto mc4 = stats::mean_stderr(c);
  rec.self_intersection = {mc4.mean, mc4.stderr};
  rec.gaussian_term = root_moment(stats::mean_stderr(d4), 4.0);
  rec.vanishing_term = root_moment(stats::mean_stderr(d8), 8.0);
  return rec;
}

}  // namespace sao
