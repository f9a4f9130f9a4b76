#include "sao/common/boundary.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "sao/common/format.hpp"

namespace sao {

BoundaryCondition BoundaryCondition::robin(double w) {
  if (!std::isfinite(w)) {
    throw std::invalid_argument("Robin boundary parameter must be finite (use Dirichlet for +inf)");
  }
  return BoundaryCondition(false, w);
}

BoundaryCondition BoundaryCondition::parse(const std::string& text) {
  std::string lower;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '"' && c != '\'') {
      lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (lower == "inf" || lower == "+inf" || lower == "infinity" || lower == "+infinity") {
    return dirichlet();
  }
  if (lower == "-inf" || lower == "-infinity") {
    throw std::invalid_argument("boundary parameter w = -inf is not allowed");
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(lower.data(), lower.data() + lower.size(), value);
  if (ec != std::errc() || ptr != lower.data() + lower.size() || lower.empty()) {
    throw std::invalid_argument("cannot parse boundary parameter '" + text + "'");
  }
  return robin(value);
}

std::string BoundaryCondition::to_string() const {
  return dirichlet_ ? std::string("inf") : format_double(w_);
}

}  // namespace sao
