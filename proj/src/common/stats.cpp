#include "sao/common/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace sao::stats {

MeanEstimate mean_stderr(std::span<const double> xs) {
  MeanEstimate out;
  out.count = xs.size();
  if (xs.empty()) return out;
  out.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.stderr = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
  }
  return out;
}

double sample_variance(std::span<const double> xs) { return sample_covariance(xs, xs); }

double sample_covariance(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("sample_covariance: need two equal-length samples of size >= 2");
  }
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double s = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (xs[i] - mx) * (ys[i] - my);
  return s / (n - 1.0);
}

JackknifeEstimate jackknife(std::size_t n, double full_value,
                            const std::function<double(std::size_t)>& leave_out) {
  JackknifeEstimate out{full_value, 0.0};
  if (n < 2) return out;
  std::vector<double> loo(n);
  for (std::size_t i = 0; i < n; ++i) loo[i] = leave_out(i);
  const double mean = std::accumulate(loo.begin(), loo.end(), 0.0) / static_cast<double>(n);
  double ss = 0.0;
  for (double v : loo) ss += (v - mean) * (v - mean);
  out.stderr = std::sqrt(ss * static_cast<double>(n - 1) / static_cast<double>(n));
  return out;
}

std::vector<double> leave_one_out_covariances(std::span<const double> xs,
                                              std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 3) {
    throw std::invalid_argument("leave_one_out_covariances: need equal-length samples of size >= 3");
  }
  const std::size_t n = xs.size();
  const double nd = static_cast<double>(n);
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / nd;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / nd;
  // Centered sums; centering is exact for the covariance and avoids cancellation.
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) sxy += (xs[i] - mx) * (ys[i] - my);
  std::vector<double> out(n);
  const double m = nd - 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    // sum over j != i of (x_j - mx)(y_j - my) = sxy - dx*dy; the leave-one-out
    // mean shifts by -dx/m, which removes m * (dx/m) * (dy/m).
    out[i] = (sxy - dx * dy - dx * dy / m) / (m - 1.0);
  }
  return out;
}

JackknifeEstimate jackknife_covariance(std::span<const double> xs, std::span<const double> ys) {
  const double full = sample_covariance(xs, ys);
  if (xs.size() < 3) return {full, 0.0};
  const auto loo = leave_one_out_covariances(xs, ys);
  return jackknife(loo.size(), full, [&](std::size_t i) { return loo[i]; });
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-17) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double en = std::sqrt(na * nb / (na + nb));
  return {d, kolmogorov_survival((en + 0.12 + 0.11 / en) * d)};
}

namespace {

std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return xs[l] < xs[r]; });
  std::vector<double> ranks(xs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

SpearmanResult spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 3) {
    throw std::invalid_argument("spearman: need equal-length samples of size >= 3");
  }
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  const double sxy = sample_covariance(rx, ry);
  const double sx = std::sqrt(sample_variance(rx));
  const double sy = std::sqrt(sample_variance(ry));
  SpearmanResult out;
  if (sx == 0.0 || sy == 0.0) return out;
  out.rho = std::clamp(sxy / (sx * sy), -1.0, 1.0);
  const double df = static_cast<double>(xs.size()) - 2.0;
  if (std::abs(out.rho) >= 1.0) {
    out.p_two_sided = 0.0;
    out.p_decreasing = out.rho < 0 ? 0.0 : 1.0;
    return out;
  }
  const double t = out.rho * std::sqrt(df / (1.0 - out.rho * out.rho));
  boost::math::students_t dist(df);
  out.p_decreasing = boost::math::cdf(dist, t);
  out.p_two_sided = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
  return out;
}

LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("linear_fit: need at least two points");
  }
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissae");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (xs.size() > 2) {
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double r = ys[i] - fit.intercept - fit.slope * xs[i];
      rss += r * r;
    }
    const double s2 = rss / (n - 2.0);
    fit.slope_stderr = std::sqrt(s2 / sxx);
    fit.intercept_stderr = std::sqrt(s2 * (1.0 / n + mx * mx / sxx));
  }
  return fit;
}

}  // namespace sao::stats
