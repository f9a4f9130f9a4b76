#pragma once

#include <cstdio>
#include <string>

namespace sao {

/// Fixed 17-significant-digit decimal rendering, stable across runs.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace sao
