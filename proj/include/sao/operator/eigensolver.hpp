#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sao/common/boundary.hpp"
#include "sao/operator/tridiagonal.hpp"

namespace sao {

/// Sturm sequence of a symmetric tridiagonal matrix T.
///
/// count(x) is the number of negative pivots in the LDL^T factorization of
/// T - x I, i.e. the number of eigenvalues strictly below x (Sylvester's law of
/// inertia). Tiny pivots are replaced by -pivmin as in LAPACK's dstebz, which
/// keeps the count monotone in x.
class SturmSequence {
 public:
  SturmSequence(std::span<const double> diagonal, std::span<const double> off_diagonal);

  std::size_t size() const noexcept { return diagonal_.size(); }
  std::size_t count(double x) const;

  struct Evaluation {
    std::size_t count;
    double log_derivative;  // d/dx log|det(T - x I)|
  };
  Evaluation evaluate(double x) const;

  /// Gershgorin interval, padded so that count(lower) == 0 and count(upper) == size().
  double lower_bound() const noexcept { return lower_; }
  double upper_bound() const noexcept { return upper_; }

 private:
  std::span<const double> diagonal_;
  std::vector<double> off_squared_;
  double pivmin_ = 0.0;
  double lower_ = 0.0;
  double upper_ = 0.0;
};

/// The k smallest eigenvalues, ascending, each within `tol` (absolute) of an
/// exact eigenvalue of the matrix. Intervals are split by bisection until each
/// holds one eigenvalue, which is then polished by Newton steps on the
/// characteristic polynomial, safeguarded by the Sturm bracket.
std::vector<double> smallest_eigenvalues(std::span<const double> diagonal,
                                         std::span<const double> off_diagonal, std::size_t k,
                                         double tol);

struct SpectrumMetadata {
  std::string source;  // "sao" or "gbe-edge"
  double length = 0.0;
  double spacing = 0.0;
  double beta = 0.0;
  BoundaryCondition boundary = BoundaryCondition::dirichlet();
  std::optional<std::uint64_t> seed;
  std::size_t ensemble_size = 0;  // gbe-edge only
  double tolerance = 0.0;
};

/// Lowest eigenvalues of one operator sample, ascending.
struct Spectrum {
  std::vector<double> eigenvalues;
  SpectrumMetadata metadata;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  double lowest() const { return eigenvalues.front(); }
  /// Largest resolved eigenvalue; points above it are not represented.
  double highest() const { return eigenvalues.back(); }
};

/// Throws std::invalid_argument unless 1 <= k <= op.size() and tol > 0.
Spectrum eig_smallest(const TridiagonalOperator& op, std::size_t k, double tol = 1e-8);

}  // namespace sao
