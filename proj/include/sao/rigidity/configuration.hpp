#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "sao/operator/eigensolver.hpp"

namespace sao {

/// A finite realization of the lowest points of the eigenvalue process.
/// Points above `resolved_up_to` exist but were not computed.
struct PointConfiguration {
  std::vector<double> points;  // ascending
  double resolved_up_to = std::numeric_limits<double>::infinity();
  std::size_t truncation_rank = 0;  // k of the spectra this came from; 0 if unknown

  static PointConfiguration from_spectrum(const Spectrum& spectrum);
  /// Throws std::invalid_argument if unsorted, non-finite, or above the resolved level.
  void validate() const;
};

/// Closed interval [lo, hi]; lo may be -inf.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// Finite union of disjoint closed intervals, bounded above.
class WindowSpec {
 public:
  WindowSpec() = default;
  /// Sorts the intervals; throws if any is empty, unbounded above, or if two overlap.
  explicit WindowSpec(std::vector<Interval> intervals);

  /// Parses "a:b;c:d" with "-inf" allowed as a left end. Empty string = empty window.
  static WindowSpec parse(const std::string& text);
  std::string to_string() const;

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  bool contains(double x) const noexcept;
  /// Supremum of the window (-inf if empty).
  double sup() const noexcept;
  /// Lowest finite endpoint, or nullopt-like NaN when there is none.
  double lowest_finite_endpoint() const noexcept;

 private:
  std::vector<Interval> intervals_;
};

/// Number of points inside B. Throws if B reaches above the resolved level.
std::size_t count_in(const PointConfiguration& config, const WindowSpec& window);

/// The configuration with the points of B removed, same resolved level.
PointConfiguration restrict_outside(const PointConfiguration& config, const WindowSpec& window);

}  // namespace sao
