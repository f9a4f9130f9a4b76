#include "sao/rigidity/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sao/common/stats.hpp"

namespace sao {

std::size_t ReferenceCurve::index_of(double t) const {
  const auto it = std::find(times.begin(), times.end(), t);
  if (it == times.end()) {
    throw std::invalid_argument("reference curve does not cover time " + std::to_string(t));
  }
  return static_cast<std::size_t>(it - times.begin());
}

double ReferenceCurve::covariance(std::size_t i, std::size_t j) const {
  if (samples < 2) throw std::invalid_argument("reference covariance needs >= 2 samples");
  double s = 0.0;
  for (std::size_t m = 0; m < samples; ++m) {
    s += (trace(m, i) - means[i]) * (trace(m, j) - means[j]);
  }
  return s / static_cast<double>(samples - 1);
}

ReferenceCurve reference_from_spectra(const std::vector<Spectrum>& spectra, std::span<const double> times) {
  if (spectra.size() < 2) throw std::invalid_argument("reference curve needs n_samples >= 2");
  if (times.empty()) throw std::invalid_argument("reference curve needs at least one time");
  for (double t : times) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("reference times must be positive");
  }
  ReferenceCurve ref;
  ref.times.assign(times.begin(), times.end());
  ref.samples = spectra.size();
  ref.truncation_rank = spectra.front().size();
  const std::size_t T = times.size();
  ref.traces.resize(ref.samples * T);
  ref.truncation.assign(T, 0.0);
  for (std::size_t m = 0; m < ref.samples; ++m) {
    if (spectra[m].size() != ref.truncation_rank) {
      throw std::invalid_argument("reference spectra must share one truncation rank");
    }
    for (std::size_t i = 0; i < T; ++i) {
      const auto est = trace_spectral(spectra[m], times[i]);
      ref.traces[m * T + i] = est.value;
      ref.truncation[i] = std::max(ref.truncation[i], est.truncation_diagnostic);
    }
  }
  ref.means.resize(T);
  ref.stderrs.resize(T);
  std::vector<double> column(ref.samples);
  for (std::size_t i = 0; i < T; ++i) {
    for (std::size_t m = 0; m < ref.samples; ++m) column[m] = ref.traces[m * T + i];
    const auto est = stats::mean_stderr(column);
    ref.means[i] = est.mean;
    ref.stderrs[i] = est.stderr;
  }
  return ref;
}

ReferenceCurve reference_mean_trace(const EnsembleSpec& spec, std::span<const double> times,
                                    std::size_t n_samples, std::uint64_t seed, unsigned workers) {
  if (n_samples < 2) throw std::invalid_argument("reference curve needs n_samples >= 2");
  return reference_from_spectra(sample_spectra(spec, n_samples, seed, "rigidity-reference", workers), times);
}

void TSequence::validate() const {
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (!(candidates[i] < candidates[i - 1])) throw std::invalid_argument("TSequence: times must strictly decrease");
  }
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (selected[i] >= candidates.size()) throw std::invalid_argument("TSequence: selected index out of range");
    if (i > 0 && selected[i] <= selected[i - 1]) {
      throw std::invalid_argument("TSequence: selected indices must strictly increase");
    }
  }
}

std::vector<double> geometric_times(double t0, double gamma, std::size_t count, double t_min) {
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw std::invalid_argument("rigidity.t0 must be > 0");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("rigidity.gamma must lie in (0, 1)");
  std::vector<double> out;
  double t = t0;
  for (std::size_t i = 0; i < count; ++i, t *= gamma) {
    if (t < t_min) break;
    out.push_back(t);
  }
  return out;
}

TSequence select_sparse_subsequence(std::vector<double> candidates, const CovarianceProvider& cov,
                                    std::size_t K) {
  TSequence seq;
  seq.candidates = std::move(candidates);
  seq.requested = K;
  seq.validate();
  if (K == 0 || seq.candidates.empty()) return seq;
  seq.selected.push_back(0);
  for (std::size_t j = 1; j < seq.candidates.size() && seq.selected.size() < K; ++j) {
    const double threshold = 1.0 / static_cast<double>(seq.selected.size() + 1);
    const bool ok = std::all_of(seq.selected.begin(), seq.selected.end(),
                                [&](std::size_t i) { return std::abs(cov(i, j)) <= threshold; });
    if (ok) seq.selected.push_back(j);
  }
  return seq;
}

bool satisfies_thresholds(const TSequence& tseq, const CovarianceProvider& cov) {
  for (std::size_t m = 1; m < tseq.selected.size(); ++m) {
    const double threshold = 1.0 / static_cast<double>(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
      if (std::abs(cov(tseq.selected[i], tseq.selected[m])) > threshold) return false;
    }
  }
  return true;
}

namespace {

void check_inputs(const PointConfiguration& outside, const WindowSpec& window,
                  const ReferenceCurve& reference, const TSequence& tseq, std::size_t depth) {
  if (depth == 0) throw std::invalid_argument("rigidity depth must be >= 1");
  if (depth > tseq.selected.size()) {
    throw std::invalid_argument("rigidity depth " + std::to_string(depth) + " exceeds selection length " +
                                std::to_string(tseq.selected.size()));
  }
  if (!window.empty() && window.sup() > outside.resolved_up_to) {
    throw std::invalid_argument("window reaches above the resolved range of the configuration");
  }
  if (outside.truncation_rank != 0 && reference.truncation_rank != 0 &&
      outside.truncation_rank != reference.truncation_rank) {
    throw std::invalid_argument("configuration and reference use different truncation ranks");
  }
}

double outside_sum(const PointConfiguration& outside, double t) {
  double s = 0.0;
  for (double x : outside.points) s += std::exp(-t * x);
  return s;
}

}  // namespace

std::vector<double> rigidity_estimate_path(const PointConfiguration& outside, const WindowSpec& window,
                                           const ReferenceCurve& reference, const TSequence& tseq) {
  check_inputs(outside, window, reference, tseq, std::max<std::size_t>(1, tseq.selected.size()));
  std::vector<double> path;
  path.reserve(tseq.selected.size());
  double acc = 0.0;
  for (std::size_t n = 0; n < tseq.selected.size(); ++n) {
    const double t = tseq.selected_time(n);
    acc += reference.means[reference.index_of(t)] - outside_sum(outside, t);
    path.push_back(acc / static_cast<double>(n + 1));
  }
  return path;
}

double rigidity_estimate(const PointConfiguration& outside, const WindowSpec& window,
                         const ReferenceCurve& reference, const TSequence& tseq, std::size_t depth) {
  return rigidity_estimate_with_error(outside, window, reference, tseq, depth).value;
}

RigidityValue rigidity_estimate_with_error(const PointConfiguration& outside, const WindowSpec& window,
                                           const ReferenceCurve& reference, const TSequence& tseq,
                                           std::size_t depth) {
  check_inputs(outside, window, reference, tseq, depth);
  std::vector<std::size_t> idx(depth);
  double acc = 0.0;
  for (std::size_t n = 0; n < depth; ++n) {
    const double t = tseq.selected_time(n);
    idx[n] = reference.index_of(t);
    acc += reference.means[idx[n]] - outside_sum(outside, t);
  }
  RigidityValue out;
  out.value = acc / static_cast<double>(depth);
  if (reference.samples >= 2) {
    double v = 0.0;
    for (std::size_t a : idx) {
      for (std::size_t b : idx) v += reference.covariance(a, b);
    }
    v /= static_cast<double>(depth * depth);
    out.stderr = std::sqrt(std::max(0.0, v) * (1.0 + 1.0 / static_cast<double>(reference.samples)));
  }
  return out;
}

long round_prediction(double estimate) {
  if (!std::isfinite(estimate)) throw std::invalid_argument("cannot round a non-finite estimate");
  return std::lround(estimate);
}

}  // namespace sao
