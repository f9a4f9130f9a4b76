#pragma once

#include <string>

namespace sao {

/// Boundary parameter w at the origin: Robin f'(0) = w f(0) for finite w,
/// Dirichlet f(0) = 0 for w = +inf. Dirichlet is a tag, never a floating inf.
class BoundaryCondition {
 public:
  static BoundaryCondition dirichlet() { return BoundaryCondition(true, 0.0); }
  /// Throws std::invalid_argument for non-finite w (use dirichlet() for +inf).
  static BoundaryCondition robin(double w);
  /// Accepts "inf", "+inf", "infinity" (case-insensitive) or a finite number.
  static BoundaryCondition parse(const std::string& text);

  bool is_dirichlet() const noexcept { return dirichlet_; }
  /// Robin parameter; only meaningful when !is_dirichlet().
  double w() const noexcept { return w_; }
  std::string to_string() const;

  friend bool operator==(const BoundaryCondition&, const BoundaryCondition&) = default;

 private:
  BoundaryCondition(bool dirichlet, double w) : dirichlet_(dirichlet), w_(w) {}
  bool dirichlet_;
  double w_;
};

}  // namespace sao
