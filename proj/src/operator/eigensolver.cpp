#include "sao/operator/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sao {

SturmSequence::SturmSequence(std::span<const double> diagonal,
                             std::span<const double> off_diagonal)
    : diagonal_(diagonal) {
  const std::size_t m = diagonal.size();
  if (m == 0) throw std::invalid_argument("SturmSequence: empty matrix");
  if (off_diagonal.size() + 1 != m) {
    throw std::invalid_argument("SturmSequence: off-diagonal must have size m - 1");
  }
  off_squared_.resize(m - 1);
  double max_e2 = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    off_squared_[i] = off_diagonal[i] * off_diagonal[i];
    max_e2 = std::max(max_e2, off_squared_[i]);
  }
  pivmin_ = std::numeric_limits<double>::min() * std::max(1.0, max_e2);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < m; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off_diagonal[i - 1]);
    if (i + 1 < m) radius += std::abs(off_diagonal[i]);
    lo = std::min(lo, diagonal[i] - radius);
    hi = std::max(hi, diagonal[i] + radius);
  }
  const double tnorm = std::max(std::abs(lo), std::abs(hi));
  const double pad = 4.0 * std::numeric_limits<double>::epsilon() * tnorm * static_cast<double>(m + 1) +
                     4.0 * pivmin_ + std::numeric_limits<double>::min();
  lower_ = lo - pad;
  upper_ = hi + pad;
}

std::size_t SturmSequence::count(double x) const {
  const std::size_t m = diagonal_.size();
  double q = diagonal_[0] - x;
  if (std::abs(q) < pivmin_) q = -pivmin_;
  std::size_t negatives = q < 0.0 ? 1 : 0;
  for (std::size_t i = 1; i < m; ++i) {
    q = (diagonal_[i] - x) - off_squared_[i - 1] / q;
    if (std::abs(q) < pivmin_) q = -pivmin_;
    negatives += q < 0.0 ? 1 : 0;
  }
  return negatives;
}

SturmSequence::Evaluation SturmSequence::evaluate(double x) const {
  const std::size_t m = diagonal_.size();
  double q = diagonal_[0] - x;
  if (std::abs(q) < pivmin_) q = -pivmin_;
  double dq = -1.0;
  double log_derivative = dq / q;
  std::size_t negatives = q < 0.0 ? 1 : 0;
  for (std::size_t i = 1; i < m; ++i) {
    const double ratio = off_squared_[i - 1] / q;
    const double next_dq = -1.0 + ratio * dq / q;
    q = (diagonal_[i] - x) - ratio;
    if (std::abs(q) < pivmin_) q = -pivmin_;
    dq = next_dq;
    log_derivative += dq / q;
    negatives += q < 0.0 ? 1 : 0;
  }
  return {negatives, log_derivative};
}

namespace {

// Root of the characteristic polynomial inside (a, b), where count(a) == j and
// count(b) == j + 1.
double polish_isolated(const SturmSequence& sturm, double a, double b, std::size_t j, double tol) {
  double x = 0.5 * (a + b);
  double dx_old = b - a;
  double dx = dx_old;
  for (int iter = 0; iter < 400; ++iter) {
    if (b - a <= tol) break;
    const auto ev = sturm.evaluate(x);
    if (ev.count <= j) {
      a = x;
    } else {
      b = x;
    }
    if (b - a <= tol) break;

    const double step = 1.0 / ev.log_derivative;
    const double candidate = x - step;
    const bool newton_ok = std::isfinite(candidate) && candidate > a && candidate < b &&
                           std::abs(step) < 0.5 * std::abs(dx_old);
    dx_old = dx;
    if (!newton_ok) {
      dx = 0.5 * (b - a);
      const double mid = a + dx;
      if (mid <= a || mid >= b) break;
      x = mid;
      continue;
    }
    dx = step;
    if (std::abs(step) <= 0.25 * tol) {
      const double lo = std::max(a, candidate - 0.5 * tol);
      const double hi = std::min(b, candidate + 0.5 * tol);
      const std::size_t c_lo = lo > a ? sturm.count(lo) : j;
      const std::size_t c_hi = hi < b ? sturm.count(hi) : j + 1;
      if (c_lo <= j && c_hi >= j + 1) return candidate;
      if (c_lo > j) b = lo;
      if (c_hi <= j) a = hi;
      x = 0.5 * (a + b);
      dx_old = dx = b - a;
      continue;
    }
    x = candidate;
  }
  return 0.5 * (a + b);
}

struct Bracket {
  double lo;
  double hi;
  std::size_t count_lo;
  std::size_t count_hi;
};

}  // namespace

std::vector<double> smallest_eigenvalues(std::span<const double> diagonal,
                                         std::span<const double> off_diagonal, std::size_t k,
                                         double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("smallest_eigenvalues: tol must be positive");
  if (k < 1 || k > diagonal.size()) {
    throw std::invalid_argument("smallest_eigenvalues: k must satisfy 1 <= k <= m");
  }
  const SturmSequence sturm(diagonal, off_diagonal);
  std::vector<double> values(k, std::numeric_limits<double>::quiet_NaN());

  std::vector<Bracket> stack;
  stack.push_back({sturm.lower_bound(), sturm.upper_bound(), sturm.count(sturm.lower_bound()),
                   sturm.count(sturm.upper_bound())});
  while (!stack.empty()) {
    const Bracket br = stack.back();
    stack.pop_back();
    if (br.count_lo >= k || br.count_hi <= br.count_lo) continue;
    const double mid = 0.5 * (br.lo + br.hi);
    const bool unsplittable = mid <= br.lo || mid >= br.hi;
    if (br.hi - br.lo <= tol || unsplittable) {
      for (std::size_t j = br.count_lo; j < std::min(br.count_hi, k); ++j) values[j] = mid;
      continue;
    }
    if (br.count_hi - br.count_lo == 1) {
      values[br.count_lo] = polish_isolated(sturm, br.lo, br.hi, br.count_lo, tol);
      continue;
    }
    const std::size_t count_mid = sturm.count(mid);
    // Upper half first so the lower half is processed next (depth-first, low to high).
    stack.push_back({mid, br.hi, count_mid, br.count_hi});
    stack.push_back({br.lo, mid, br.count_lo, count_mid});
  }
  // Rounding in the counts can leave equal clusters in slightly broken order.
  std::sort(values.begin(), values.end());
  return values;
}

Spectrum eig_smallest(const TridiagonalOperator& op, std::size_t k, double tol) {
  if (k < 1 || k > op.size()) throw std::invalid_argument("eig_smallest: k out of range");
  if (!(tol > 0.0)) throw std::invalid_argument("eig_smallest: tol must be positive");
  Spectrum spec;
  spec.eigenvalues = smallest_eigenvalues(op.diagonal, op.off_diagonal, k, tol);
  spec.metadata.source = "sao";
  spec.metadata.length = op.provenance.length;
  spec.metadata.spacing = op.provenance.spacing;
  spec.metadata.beta = op.provenance.beta;
  spec.metadata.boundary = op.boundary;
  spec.metadata.seed = op.provenance.seed;
  spec.metadata.tolerance = tol;
  return spec;
}

}  // namespace sao
