#include "sao/trace/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sao {

double kernel_prefactor(double t, double x) {
  if (!(t > 0.0)) throw std::invalid_argument("kernel_prefactor: t must be positive");
  return (1.0 + std::exp(-2.0 * x * x / t)) / std::sqrt(2.0 * std::numbers::pi * t);
}

double kernel_prefactor_pair(double t, double u, double x, double y) {
  return kernel_prefactor(t, x) * kernel_prefactor(u, y);
}

}  // namespace sao
