#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sao/common/stats.hpp"
#include "sao/rigidity/configuration.hpp"
#include "sao/rigidity/reconstruction.hpp"
#include "sao/trace/spectral.hpp"

namespace sao {

struct RigidityConfig {
  EnsembleSpec ensemble;
  WindowSpec window;
  double t0 = 1.0;
  double gamma = 0.8;
  std::size_t candidates = 60;
  std::size_t depth = 0;  // 0: the whole selection
  std::size_t replicates = 500;
  std::size_t reference_samples = 2000;
  std::uint64_t seed = 0;
  unsigned workers = 1;

  void validate() const;
};

struct ReplicateRow {
  std::size_t replicate = 0;
  std::size_t true_count = 0;
  double estimate = 0.0;
  double estimate_stderr = 0.0;
  long prediction = 0;
};

struct RigidityReport {
  std::vector<ReplicateRow> rows;
  std::vector<double> mse;  // mse[n-1] = mean squared error at depth n
  double hit_rate = 0.0;
  std::size_t depth = 0;
  double t_min = 0.0;
  TSequence tseq;
  ReferenceCurve reference;
  stats::SpearmanResult trend;  // Spearman of (n, MSE(n))
};

/// Reference ensemble ("rigidity-reference"), candidate grid floored at
/// 5 / mean lambda_k, greedy selection on the reference covariances, then
/// `replicates` fresh spectra ("rigidity-replicate") scored against their
/// true window counts.
RigidityReport rigidity_experiment(const RigidityConfig& config);

}  // namespace sao
