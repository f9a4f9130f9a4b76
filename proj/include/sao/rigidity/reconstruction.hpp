#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sao/rigidity/configuration.hpp"
#include "sao/trace/spectral.hpp"

namespace sao {

/// Ensemble means of spectral traces on a list of semigroup times, together
/// with the per-sample traces they were computed from.
struct ReferenceCurve {
  std::vector<double> times;
  std::vector<double> means;
  std::vector<double> stderrs;
  std::vector<double> truncation;  // max over samples of k e^{-t lambda_k}
  std::size_t samples = 0;
  std::size_t truncation_rank = 0;
  std::vector<double> traces;  // samples x times, row-major

  std::size_t size() const noexcept { return times.size(); }
  double trace(std::size_t sample, std::size_t time_index) const {
    return traces[sample * times.size() + time_index];
  }
  /// Index of `t` in `times` (exact match); throws if absent.
  std::size_t index_of(double t) const;
  /// Unbiased covariance of the sampled traces at time indices (i, j).
  double covariance(std::size_t i, std::size_t j) const;
};

/// Reference curve from spectra the caller already holds. Requires >= 2 spectra
/// of equal rank.
ReferenceCurve reference_from_spectra(const std::vector<Spectrum>& spectra, std::span<const double> times);

/// Reference curve from n_samples fresh spectra in the "rigidity-reference"
/// seed namespace.
ReferenceCurve reference_mean_trace(const EnsembleSpec& spec, std::span<const double> times,
                                    std::size_t n_samples, std::uint64_t seed, unsigned workers = 1);

/// Candidate times and the sub-indices picked from them (0-based).
struct TSequence {
  std::vector<double> candidates;  // strictly decreasing
  std::vector<std::size_t> selected;  // strictly increasing
  std::size_t requested = 0;
  bool complete() const noexcept { return selected.size() >= requested; }
  double selected_time(std::size_t i) const { return candidates.at(selected.at(i)); }
  /// Throws std::invalid_argument if either ordering invariant fails.
  void validate() const;
};

/// t_i = t0 gamma^{i-1} for i = 1..count, dropping every value below t_min.
std::vector<double> geometric_times(double t0, double gamma, std::size_t count, double t_min = 0.0);

/// Cov(t_i, t_j) of centered traces, indexed by candidate position.
using CovarianceProvider = std::function<double(std::size_t, std::size_t)>;

/// Greedy sparse selection: the first candidate, then repeatedly the smallest
/// later index whose |Cov| against every selected index is <= 1/(m+1), where m
/// is the number already selected. Stops at K indices or when the candidates
/// run out.
TSequence select_sparse_subsequence(std::vector<double> candidates, const CovarianceProvider& cov,
                                    std::size_t K);

/// True iff every selected index satisfies its threshold against `cov`.
bool satisfies_thresholds(const TSequence& tseq, const CovarianceProvider& cov);

struct RigidityValue {
  double value = 0.0;
  double stderr = 0.0;  // spread of the averaged centered trace plus reference noise
};

/// (1/n) sum_{i<=n} (mean trace at t_{r_i} - sum_{x in outside} e^{-t_{r_i} x}).
double rigidity_estimate(const PointConfiguration& outside, const WindowSpec& window,
                         const ReferenceCurve& reference, const TSequence& tseq, std::size_t depth);

RigidityValue rigidity_estimate_with_error(const PointConfiguration& outside, const WindowSpec& window,
                                           const ReferenceCurve& reference, const TSequence& tseq,
                                           std::size_t depth);

/// Estimates at every depth 1..tseq.selected.size().
std::vector<double> rigidity_estimate_path(const PointConfiguration& outside, const WindowSpec& window,
                                           const ReferenceCurve& reference, const TSequence& tseq);

/// Nearest integer, ties away from zero.
long round_prediction(double estimate);

}  // namespace sao
