#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace sao::stats {

struct MeanEstimate {
  double mean = 0.0;
  double stderr = 0.0;
  std::size_t count = 0;
};

MeanEstimate mean_stderr(std::span<const double> xs);
/// Unbiased (n-1) sample variance. Requires at least two values.
double sample_variance(std::span<const double> xs);
/// Unbiased (n-1) sample covariance. Requires equal lengths >= 2.
double sample_covariance(std::span<const double> xs, std::span<const double> ys);

struct JackknifeEstimate {
  double value = 0.0;   // full-sample statistic
  double stderr = 0.0;  // delete-one jackknife standard error
};

/// Delete-one jackknife: `leave_out(i)` returns the statistic without sample i.
JackknifeEstimate jackknife(std::size_t n, double full_value,
                            const std::function<double(std::size_t)>& leave_out);

/// Sample covariance with its jackknife standard error, O(n).
JackknifeEstimate jackknife_covariance(std::span<const double> xs, std::span<const double> ys);

/// Leave-one-out sample covariances (n-1 denominators), O(n) total.
std::vector<double> leave_one_out_covariances(std::span<const double> xs,
                                              std::span<const double> ys);

/// Kolmogorov limiting survival function Q(lambda) = 2 sum (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_survival(double lambda);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value
/// (Stephens' effective-size correction).
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

struct SpearmanResult {
  double rho = 0.0;
  double p_two_sided = 1.0;
  double p_decreasing = 1.0;  // one-sided, alternative rho < 0
};

/// Spearman rank correlation (average ranks for ties), Student-t approximation.
SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys);

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double intercept_stderr = 0.0;
  double slope_stderr = 0.0;
};

/// Ordinary least squares y = intercept + slope * x. Residual-based standard
/// errors when n > 2, zero otherwise.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

}  // namespace sao::stats
