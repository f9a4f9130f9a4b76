#include "sao/rigidity/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sao/common/format.hpp"

namespace sao {

PointConfiguration PointConfiguration::from_spectrum(const Spectrum& spectrum) {
  PointConfiguration c{spectrum.eigenvalues, spectrum.highest(), spectrum.size()};
  c.validate();
  return c;
}

void PointConfiguration::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i])) throw std::invalid_argument("PointConfiguration: non-finite point");
    if (i > 0 && points[i] < points[i - 1]) throw std::invalid_argument("PointConfiguration: points not sorted");
  }
  if (!points.empty() && points.back() > resolved_up_to) {
    throw std::invalid_argument("PointConfiguration: point above the resolved level");
  }
}

WindowSpec::WindowSpec(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  for (const auto& iv : intervals_) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi) || iv.lo > iv.hi) {
      throw std::invalid_argument("WindowSpec: empty or malformed interval");
    }
    if (!std::isfinite(iv.hi)) throw std::invalid_argument("WindowSpec: window must be bounded above");
  }
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    if (intervals_[i].lo <= intervals_[i - 1].hi) {
      throw std::invalid_argument("WindowSpec: intervals must be disjoint");
    }
  }
}

namespace {

double parse_endpoint(const std::string& s) {
  std::string t;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t == "-inf") return -INFINITY;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("WindowSpec: cannot parse endpoint '" + s + "'");
  }
  if (used != t.size() || !std::isfinite(v)) {
    throw std::invalid_argument("WindowSpec: cannot parse endpoint '" + s + "'");
  }
  return v;
}

}  // namespace

WindowSpec WindowSpec::parse(const std::string& text) {
  std::vector<Interval> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ';')) {
    if (piece.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = piece.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("WindowSpec: expected 'lo:hi' in '" + piece + "'");
    out.push_back({parse_endpoint(piece.substr(0, colon)), parse_endpoint(piece.substr(colon + 1))});
  }
  return WindowSpec(std::move(out));
}

std::string WindowSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i > 0) s += ";";
    s += std::isinf(intervals_[i].lo) ? std::string("-inf") : format_double(intervals_[i].lo);
    s += ":" + format_double(intervals_[i].hi);
  }
  return s;
}

bool WindowSpec::contains(double x) const noexcept {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [x](const Interval& iv) { return iv.contains(x); });
}

double WindowSpec::sup() const noexcept { return intervals_.empty() ? -INFINITY : intervals_.back().hi; }

double WindowSpec::lowest_finite_endpoint() const noexcept {
  if (intervals_.empty()) return NAN;
  const auto& first = intervals_.front();
  return std::isfinite(first.lo) ? first.lo : first.hi;
}

namespace {

void check_resolved(const PointConfiguration& config, const WindowSpec& window) {
  if (!window.empty() && window.sup() > config.resolved_up_to) {
    throw std::invalid_argument("window reaches above the resolved range of the configuration");
  }
}

}  // namespace

std::size_t count_in(const PointConfiguration& config, const WindowSpec& window) {
  check_resolved(config, window);
  return static_cast<std::size_t>(
      std::count_if(config.points.begin(), config.points.end(),
                    [&](double x) { return window.contains(x); }));
}

PointConfiguration restrict_outside(const PointConfiguration& config, const WindowSpec& window) {
  check_resolved(config, window);
  PointConfiguration out{{}, config.resolved_up_to, config.truncation_rank};
  for (double x : config.points) {
    if (!window.contains(x)) out.points.push_back(x);
  }
  return out;
}

}  // namespace sao
