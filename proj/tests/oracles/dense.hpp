#pragma once

// Full spectrum of a symmetric tridiagonal matrix by a dense solver.

#include <Eigen/Dense>
#include <vector>

namespace oracle {

inline std::vector<double> dense_eigenvalues(const std::vector<double>& diag, const std::vector<double>& off) {
  const auto m = static_cast<Eigen::Index>(diag.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) a(i, i) = diag[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    a(i, i + 1) = a(i + 1, i) = off[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace oracle
