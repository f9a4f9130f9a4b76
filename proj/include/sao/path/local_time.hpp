#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sao/path/bridge.hpp"

namespace sao {

/// Occupation-density histogram on the lattice [b*delta, (b+1)*delta), b in Z.
/// values[i] is the local time of bin first_bin + i (time per unit position).
class LocalTimeField {
 public:
  LocalTimeField(double bin_width, std::int64_t first_bin, std::vector<double> values);

  double bin_width() const noexcept { return bin_width_; }
  std::int64_t first_bin() const noexcept { return first_bin_; }
  std::int64_t last_bin() const noexcept {
    return first_bin_ + static_cast<std::int64_t>(values_.size()) - 1;
  }
  const std::vector<double>& values() const noexcept { return values_; }
  double at_bin(std::int64_t bin) const noexcept;

  /// delta * sum of bins; equals the horizon of the source path.
  double total_time() const;
  /// ||L||_2^2 = delta * sum l_b^2.
  double squared_norm() const;
  /// <L, g> = delta * sum l_b g_b with g evaluated at bin midpoints.
  double integrate(const std::function<double(double)>& g) const;
  bool same_lattice(const LocalTimeField& other) const noexcept;
  bool overlaps(const LocalTimeField& other) const noexcept;

 private:
  double bin_width_;
  std::int64_t first_bin_;
  std::vector<double> values_;
};

/// <L1, L2> = delta * sum l1_b l2_b. Throws if the lattices differ.
double inner_product(const LocalTimeField& a, const LocalTimeField& b);

/// Exact occupation histogram of the piecewise-linear interpolant: each segment
/// spends its time uniformly over the range it sweeps.
LocalTimeField local_time(const BridgePath& path, double bin_width);

/// (1 / 2 eps) * time the interpolated path spends in [0, eps).
double boundary_local_time(const BridgePath& path, double eps);

}  // namespace sao
