#include "sao/path/local_time.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sao {

LocalTimeField::LocalTimeField(double bin_width, std::int64_t first_bin, std::vector<double> values)
    : bin_width_(bin_width), first_bin_(first_bin), values_(std::move(values)) {
  if (!(bin_width > 0.0)) throw std::invalid_argument("LocalTimeField: bin width must be positive");
}

double LocalTimeField::at_bin(std::int64_t bin) const noexcept {
  if (bin < first_bin_ || bin > last_bin()) return 0.0;
  return values_[static_cast<std::size_t>(bin - first_bin_)];
}

double LocalTimeField::total_time() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s * bin_width_;
}

double LocalTimeField::squared_norm() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return s * bin_width_;
}

double LocalTimeField::integrate(const std::function<double(double)>& g) const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 0.0) continue;
    const double mid = (static_cast<double>(first_bin_ + static_cast<std::int64_t>(i)) + 0.5) * bin_width_;
    s += values_[i] * g(mid);
  }
  return s * bin_width_;
}

bool LocalTimeField::same_lattice(const LocalTimeField& other) const noexcept {
  return bin_width_ == other.bin_width_;
}

bool LocalTimeField::overlaps(const LocalTimeField& other) const noexcept {
  return !values_.empty() && !other.values_.empty() && first_bin_ <= other.last_bin() &&
         other.first_bin_ <= last_bin();
}

double inner_product(const LocalTimeField& a, const LocalTimeField& b) {
  if (!a.same_lattice(b)) throw std::invalid_argument("inner_product: mismatched bin lattices");
  if (!a.overlaps(b)) return 0.0;
  const std::int64_t lo = std::max(a.first_bin(), b.first_bin());
  const std::int64_t hi = std::min(a.last_bin(), b.last_bin());
  const double* pa = a.values().data() + (lo - a.first_bin());
  const double* pb = b.values().data() + (lo - b.first_bin());
  double s = 0.0;
  for (std::int64_t i = 0; i <= hi - lo; ++i) s += pa[i] * pb[i];
  return s * a.bin_width();
}

LocalTimeField local_time(const BridgePath& path, double bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw std::invalid_argument("local_time: bin width must be positive");
  }
  if (path.values.size() < 2) throw std::invalid_argument("local_time: path needs two samples");
  const auto [mn, mx] = std::minmax_element(path.values.begin(), path.values.end());
  const auto bin_of = [bin_width](double a) {
    return static_cast<std::int64_t>(std::floor(a / bin_width));
  };
  const std::int64_t first = bin_of(*mn);
  const std::int64_t last = bin_of(*mx);
  std::vector<double> occupation(static_cast<std::size_t>(last - first + 1), 0.0);

  const double dt = path.time_step();
  for (std::size_t j = 0; j + 1 < path.values.size(); ++j) {
    const double a = path.values[j];
    const double b = path.values[j + 1];
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    const std::int64_t b_lo = bin_of(lo);
    const std::int64_t b_hi = bin_of(hi);
    if (b_lo == b_hi) {
      occupation[static_cast<std::size_t>(b_lo - first)] += dt;
      continue;
    }
    const double rate = dt / (hi - lo);
    for (std::int64_t bin = b_lo; bin <= b_hi; ++bin) {
      const double left = std::max(lo, static_cast<double>(bin) * bin_width);
      const double right = std::min(hi, static_cast<double>(bin + 1) * bin_width);
      if (right > left) occupation[static_cast<std::size_t>(bin - first)] += rate * (right - left);
    }
  }
  for (double& v : occupation) v /= bin_width;
  return LocalTimeField(bin_width, first, std::move(occupation));
}

double boundary_local_time(const BridgePath& path, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("boundary_local_time: eps must be positive");
  if (path.values.size() < 2) throw std::invalid_argument("boundary_local_time: path needs two samples");
  const double dt = path.time_step();
  double time = 0.0;
  for (std::size_t j = 0; j + 1 < path.values.size(); ++j) {
    const double lo = std::min(path.values[j], path.values[j + 1]);
    const double hi = std::max(path.values[j], path.values[j + 1]);
    if (lo >= eps || hi < 0.0) continue;
    if (hi == lo) {
      time += dt;
      continue;
    }
    const double inside = std::min(hi, eps) - std::max(lo, 0.0);
    if (inside > 0.0) time += dt * inside / (hi - lo);
  }
  return time / (2.0 * eps);
}

}  // namespace sao
