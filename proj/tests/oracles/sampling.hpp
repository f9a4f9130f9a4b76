#pragma once

// Closed-form moments and brute-force statistics used as test oracles.

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

/// Two-sided (1 - alpha) interval for sigma^2 from the sample variance of n normals.
inline std::pair<double, double> variance_interval(double sample_variance, std::size_t n, double alpha) {
  const boost::math::chi_squared chi(static_cast<double>(n - 1));
  const double dof = static_cast<double>(n - 1);
  return {dof * sample_variance / boost::math::quantile(chi, 1.0 - alpha / 2.0),
          dof * sample_variance / boost::math::quantile(chi, alpha / 2.0)};
}

/// E|N(0, s^2)|.
inline double folded_normal_mean(double s) { return s * std::sqrt(2.0 / std::numbers::pi); }

/// Delete-one jackknife standard error of the sample covariance, O(n^2).
inline double jackknife_cov_stderr(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> loo(n);
  for (std::size_t i = 0; i < n; ++i) {
    double mx = 0.0, my = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      mx += x[j];
      my += y[j];
    }
    mx /= static_cast<double>(n - 1);
    my /= static_cast<double>(n - 1);
    double c = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      c += (x[j] - mx) * (y[j] - my);
    }
    loo[i] = c / static_cast<double>(n - 2);
  }
  double mean = 0.0;
  for (double v : loo) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : loo) ss += (v - mean) * (v - mean);
  return std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n) * ss);
}

/// Integral of f along the piecewise-linear path by composite Simpson on each segment.
template <class F>
double path_time_integral(const std::vector<double>& values, double dt, F f, int sub = 64) {
  double total = 0.0;
  for (std::size_t j = 0; j + 1 < values.size(); ++j) {
    const double a = values[j], b = values[j + 1];
    const double h = dt / sub;
    double s = f(a) + f(b);
    for (int i = 1; i < sub; ++i) {
      const double v = a + (b - a) * i / sub;
      s += (i % 2 ? 4.0 : 2.0) * f(v);
    }
    total += s * h / 3.0;
  }
  return total;
}

}  // namespace oracle
