#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sao {

/// Seeded pseudo-random stream. One stream per worker task; never shared.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  double normal() { return normal_(engine_); }
  double normal(double mean, double sd) { return mean + sd * normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  /// Chi-distributed variate with `dof` degrees of freedom.
  double chi(double dof);

  std::uint64_t seed() const noexcept { return seed_; }
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Hash (root seed, module tag, node index, batch index) into a stream seed.
/// The result does not depend on how tasks are scheduled across workers.
std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                          std::uint64_t node, std::uint64_t batch) noexcept;

}  // namespace sao
