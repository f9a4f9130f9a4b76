#include "sao/common/rng.hpp"

#include <cmath>

namespace sao {

double RngStream::chi(double dof) {
  std::gamma_distribution<double> gamma(0.5 * dof, 2.0);
  return std::sqrt(gamma(engine_));
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                          std::uint64_t node, std::uint64_t batch) noexcept {
  // FNV-1a over the tag, then mix in the integers.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t s = splitmix64(root ^ splitmix64(h));
  s = splitmix64(s ^ splitmix64(node + 0x632be59bd9b4e019ULL));
  s = splitmix64(s ^ splitmix64(batch + 0x8cb92ba72f3d8dd7ULL));
  return s;
}

}  // namespace sao
