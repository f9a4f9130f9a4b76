#include "sao/operator/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace sao {

Grid build_grid(double length, std::size_t points) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("build_grid: length must be positive and finite");
  }
  if (points < 2) throw std::invalid_argument("build_grid: need at least 2 points");
  return Grid(length, points);
}

std::vector<double> Grid::nodes() const {
  std::vector<double> out(points_);
  for (std::size_t i = 0; i < points_; ++i) out[i] = node(i);
  return out;
}

NoiseIncrements NoiseIncrements::zeros(const Grid& grid, double beta) {
  return {std::vector<double>(grid.points(), 0.0), beta};
}

NoiseIncrements sample_noise(const Grid& grid, double beta, RngStream& rng) {
  if (!(beta > 0.0)) throw std::invalid_argument("sample_noise: beta must be positive");
  const double sd = std::sqrt(grid.spacing());
  NoiseIncrements out{std::vector<double>(grid.points()), beta};
  for (double& dw : out.increments) dw = sd * rng.normal();
  return out;
}

}  // namespace sao
