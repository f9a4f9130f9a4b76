#include "sao/rigidity/experiment.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sao/common/parallel.hpp"

namespace sao {

void RigidityConfig::validate() const {
  if (!(ensemble.beta > 0.0)) throw std::invalid_argument("beta must be > 0");
  if (ensemble.k < 1) throw std::invalid_argument("eigen.k must be >= 1");
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw std::invalid_argument("rigidity.t0 must be > 0");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("rigidity.gamma must lie in (0, 1)");
  if (candidates < 1) throw std::invalid_argument("rigidity.candidates must be >= 1");
  if (replicates < 1) throw std::invalid_argument("rigidity.replicates must be >= 1");
  if (reference_samples < 2) throw std::invalid_argument("rigidity.reference_samples must be >= 2");
}

RigidityReport rigidity_experiment(const RigidityConfig& config) {
  config.validate();
  RigidityReport report;

  const auto ref_spectra =
      sample_spectra(config.ensemble, config.reference_samples, config.seed, "rigidity-reference", config.workers);
  double mean_top = 0.0;
  for (const auto& s : ref_spectra) mean_top += s.highest();
  mean_top /= static_cast<double>(ref_spectra.size());
  report.t_min = mean_top > 0.0 ? 5.0 / mean_top : 0.0;

  const auto times = geometric_times(config.t0, config.gamma, config.candidates, report.t_min);
  if (times.empty()) throw std::invalid_argument("no candidate time lies above t_min = 5 / lambda_k");
  report.reference = reference_from_spectra(ref_spectra, times);

  const auto& ref = report.reference;
  report.tseq = select_sparse_subsequence(times, [&](std::size_t i, std::size_t j) { return ref.covariance(i, j); },
                                          times.size());
  const std::size_t available = report.tseq.selected.size();
  report.depth = config.depth == 0 ? available : config.depth;
  if (report.depth > available) {
    throw std::invalid_argument("rigidity.depth exceeds the selection length " + std::to_string(available));
  }

  struct Outcome {
    ReplicateRow row;
    std::vector<double> path;
  };
  const auto outcomes = ordered_map(config.replicates, config.workers, [&](std::size_t r) {
    RngStream rng(derive_seed(config.seed, "rigidity-replicate", 0, r));
    const auto spectrum = sample_spectrum(config.ensemble.beta, config.ensemble.boundary, config.ensemble.grid,
                                          config.ensemble.k, rng, config.ensemble.options);
    const auto full = PointConfiguration::from_spectrum(spectrum);
    const auto outside = restrict_outside(full, config.window);
    Outcome o;
    o.row.replicate = r;
    o.row.true_count = count_in(full, config.window);
    o.path = rigidity_estimate_path(outside, config.window, ref, report.tseq);
    o.path.resize(report.depth);
    const auto v = rigidity_estimate_with_error(outside, config.window, ref, report.tseq, report.depth);
    o.row.estimate = v.value;
    o.row.estimate_stderr = v.stderr;
    o.row.prediction = round_prediction(v.value);
    return o;
  });

  report.mse.assign(report.depth, 0.0);
  std::size_t hits = 0;
  for (const auto& o : outcomes) {
    report.rows.push_back(o.row);
    if (o.row.prediction == static_cast<long>(o.row.true_count)) ++hits;
    for (std::size_t n = 0; n < report.depth; ++n) {
      const double e = o.path[n] - static_cast<double>(o.row.true_count);
      report.mse[n] += e * e;
    }
  }
  for (double& m : report.mse) m /= static_cast<double>(outcomes.size());
  report.hit_rate = static_cast<double>(hits) / static_cast<double>(outcomes.size());

  if (report.depth >= 3) {
    std::vector<double> depths(report.depth);
    std::iota(depths.begin(), depths.end(), 1.0);
    report.trend = stats::spearman(depths, report.mse);
  }
  return report;
}

}  // namespace sao
