#pragma once

namespace sao {

/// Diagonal of the reflected heat kernel, (1 + exp(-2x^2/t)) / sqrt(2 pi t).
double kernel_prefactor(double t, double x);

/// Product of the t- and u-prefactors at (x, y).
double kernel_prefactor_pair(double t, double u, double x, double y);

}  // namespace sao
