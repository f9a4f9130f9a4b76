#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sao/common/rng.hpp"

namespace sao {

/// Uniform grid on (0, L] with nodes x_i = i*h, i = 1..n, h = L/n.
class Grid {
 public:
  double length() const noexcept { return length_; }
  std::size_t points() const noexcept { return points_; }
  double spacing() const noexcept { return length_ / static_cast<double>(points_); }
  /// Node x_{i+1} for zero-based index i.
  double node(std::size_t i) const noexcept { return static_cast<double>(i + 1) * spacing(); }
  std::vector<double> nodes() const;

  friend Grid build_grid(double length, std::size_t points);

 private:
  Grid(double length, std::size_t points) : length_(length), points_(points) {}
  double length_;
  std::size_t points_;
};

/// Throws std::invalid_argument unless length > 0 and points >= 2.
Grid build_grid(double length, std::size_t points);

/// Brownian increments over the grid cells, each N(0, h).
struct NoiseIncrements {
  std::vector<double> increments;
  double beta = 0.0;

  /// All-zero increments: the deterministic Airy operator.
  static NoiseIncrements zeros(const Grid& grid, double beta = 1.0);
};

/// Throws std::invalid_argument for beta <= 0.
NoiseIncrements sample_noise(const Grid& grid, double beta, RngStream& rng);

}  // namespace sao
