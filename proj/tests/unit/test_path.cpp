#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "../oracles/kernels.hpp"
#include "../oracles/sampling.hpp"
#include "sao/common/stats.hpp"
#include "sao/path/boundary_weight.hpp"
#include "sao/path/bridge.hpp"
#include "sao/path/functionals.hpp"
#include "sao/path/local_time.hpp"

using namespace sao;

namespace {

BridgePath constant_path(double level, double t, std::size_t steps) {
  return BridgePath{t, std::vector<double>(steps + 1, level)};
}

BridgePath ramp(double from, double to, double t, std::size_t steps) {
  BridgePath p{t, std::vector<double>(steps + 1)};
  for (std::size_t j = 0; j <= steps; ++j) p.values[j] = from + (to - from) * static_cast<double>(j) / static_cast<double>(steps);
  return p;
}

}  // namespace

TEST_CASE("free bridge endpoints and argument checks") {
  RngStream rng(1);
  const auto p = sample_free_bridge(0.3, -1.7, 2.5, 100, rng);
  CHECK(p.values.size() == 101);
  CHECK(p.start() == 0.3);
  CHECK(p.end() == -1.7);
  const auto one = sample_free_bridge(1.0, 2.0, 1.0, 1, rng);
  CHECK(one.values == std::vector<double>{1.0, 2.0});
  CHECK_THROWS_AS(sample_free_bridge(0, 0, 1.0, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_free_bridge(0, 0, 0.0, 4, rng), std::invalid_argument);
}

TEST_CASE("free bridge midpoint variance is s(1 - s)") {
  RngStream rng(2);
  const std::size_t n = 1000000;
  std::vector<double> mid(n);
  for (auto& v : mid) v = sample_free_bridge(0.0, 0.0, 1.0, 2, rng).values[1];
  const double var = stats::sample_variance(mid);
  // Var of the sample variance of normals is 2 sigma^4 / (n - 1).
  CHECK(std::abs(var - 0.25) < 3.0 * std::sqrt(2.0 / (n - 1.0)) * 0.25);
}

TEST_CASE("reflected bridge: endpoints, nonnegativity, argument checks") {
  RngStream rng(3);
  for (double x : {0.0, 0.01, 0.7, 5.0}) {
    for (int rep = 0; rep < 50; ++rep) {
      const auto p = sample_reflected_bridge(x, 1.3, 257, rng);
      CHECK(p.start() == x);
      CHECK(p.end() == x);
      CHECK(std::all_of(p.values.begin(), p.values.end(), [](double v) { return v >= 0.0; }));
    }
  }
  CHECK_THROWS_AS(sample_reflected_bridge(-0.1, 1.0, 10, rng), std::invalid_argument);
}

TEST_CASE("reflected bridge from zero: folded Gaussian midpoint") {
  RngStream rng(4);
  const double t = 1.0;
  const std::size_t n = 1000000;
  std::vector<double> mid(n);
  for (auto& v : mid) v = sample_reflected_bridge(0.0, t, 2, rng).values[1];
  const auto m = stats::mean_stderr(mid);
  CHECK(std::abs(m.mean - oracle::folded_normal_mean(std::sqrt(t / 4.0))) < 3.0 * m.stderr);
}

TEST_CASE("reflected bridge far from the wall matches a shifted free bridge") {
  RngStream a(5), b(6);
  const double x = 8.0, t = 1.0;
  std::vector<double> reflected, shifted;
  for (int i = 0; i < 20000; ++i) {
    const auto p = sample_reflected_bridge(x, t, 8, a);
    CHECK(*std::min_element(p.values.begin(), p.values.end()) > 0.0);
    reflected.push_back(p.values[3]);
    shifted.push_back(x + sample_free_bridge(0.0, 0.0, t, 8, b).values[3]);
  }
  CHECK(stats::ks_two_sample(reflected, shifted).p_value > 0.01);
}

TEST_CASE("local time of simple paths") {
  const auto c = local_time(constant_path(0.35, 2.0, 10), 0.1);
  int nonzero = 0;
  for (double v : c.values()) nonzero += v > 0.0;
  CHECK(nonzero == 1);
  CHECK(c.at_bin(3) == doctest::Approx(20.0));

  const auto r = local_time(ramp(0.0, 1.0, 1.0, 1), 0.5);
  CHECK(r.at_bin(0) == doctest::Approx(1.0));
  CHECK(r.at_bin(1) == doctest::Approx(1.0));
  CHECK(r.total_time() == doctest::Approx(1.0));
  CHECK_THROWS_AS(local_time(r.values().empty() ? BridgePath{} : ramp(0, 1, 1, 1), 0.0), std::invalid_argument);
}

TEST_CASE("property: occupation identity holds to rounding") {
  RngStream rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const double t = 0.05 + 3.0 * rng.uniform();
    const double delta = std::sqrt(t) / (20.0 + 400.0 * rng.uniform());
    const auto p = rep % 2 ? sample_reflected_bridge(2.0 * rng.uniform(), t, 700, rng)
                           : sample_free_bridge(rng.normal(), rng.normal(), t, 700, rng);
    const auto L = local_time(p, delta);
    CHECK(std::abs(L.total_time() - t) <= 1e-12 * t);
    CHECK(std::all_of(L.values().begin(), L.values().end(), [](double v) { return v >= 0.0; }));
  }
}

TEST_CASE("local time pairing matches the direct time integral") {
  RngStream rng(8);
  const auto p = sample_reflected_bridge(1.0, 1.0, 400, rng);
  const double direct = oracle::path_time_integral(p.values, p.time_step(), [](double a) { return a; });
  for (double delta : {0.02, 0.005}) {
    const double field = local_time(p, delta).integrate([](double a) { return a; });
    CHECK(std::abs(field - direct) < delta);
  }
  const double sq = oracle::path_time_integral(p.values, p.time_step(), [](double a) { return a * a; });
  CHECK(std::abs(local_time(p, 0.002).integrate([](double a) { return a * a; }) - sq) < 0.01);
}

TEST_CASE("boundary local time") {
  CHECK(boundary_local_time(constant_path(0.0, 1.5, 30), 0.1) == doctest::Approx(1.5 / 0.2));
  CHECK(boundary_local_time(constant_path(0.2, 1.5, 30), 0.1) == 0.0);
  CHECK(boundary_local_time(ramp(0.0, 1.0, 1.0, 1), 0.25) == doctest::Approx(0.25 / 0.5));
  CHECK_THROWS_AS(boundary_local_time(ramp(0, 1, 1, 1), 0.0), std::invalid_argument);
}

TEST_CASE("boundary local time: first-order extrapolation in eps reaches the bridge limit") {
  // The strip estimate is biased by O(eps); 2 est(eps/2) - est(eps) removes
  // the first-order term. E[bL^0] for the reflected bridge 0 -> 0 over [0, 1]
  // is sqrt(pi/2).
  RngStream rng(9);
  const std::size_t n = 20000;
  std::vector<double> extrapolated(n);
  for (auto& v : extrapolated) {
    const auto p = sample_reflected_bridge(0.0, 1.0, 4000, rng);
    v = 2.0 * boundary_local_time(p, 0.05) - boundary_local_time(p, 0.1);
  }
  const auto m = stats::mean_stderr(extrapolated);
  CHECK(std::abs(m.mean - std::sqrt(std::numbers::pi / 2.0)) < 3.0 * m.stderr);
}

TEST_CASE("property: Brownian scaling of the squared local-time norm") {
  const std::size_t n = 100000, steps = 200;
  const double delta1 = 1.0 / 200.0;
  std::vector<std::vector<double>> norms;
  std::uint64_t seed = 10;
  for (double t : {0.25, 1.0, 4.0}) {
    RngStream rng(seed++);
    std::vector<double> v(n);
    for (auto& x : v) x = local_time(sample_free_bridge(0.0, 0.0, t, steps, rng), delta1 * std::sqrt(t)).squared_norm() / std::pow(t, 1.5);
    norms.push_back(std::move(v));
  }
  const auto ref = stats::mean_stderr(norms[1]);
  const double ref_sd = std::sqrt(stats::sample_variance(norms[1]));
  for (std::size_t i : {0u, 2u}) {
    const auto m = stats::mean_stderr(norms[i]);
    CHECK(std::abs(m.mean - ref.mean) < 3.0 * std::hypot(m.stderr, ref.stderr));
    const double sd = std::sqrt(stats::sample_variance(norms[i]));
    // Standard error of a sample sd, normal approximation with excess kurtosis ignored.
    CHECK(std::abs(sd - ref_sd) < 6.0 * ref_sd / std::sqrt(2.0 * n));
  }
}

TEST_CASE("property: refinement changes the potential pairing by O(delta + 1/N)") {
  RngStream rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t N = 512;
    const auto fine = sample_reflected_bridge(1.0, 1.0, 2 * N, rng);
    BridgePath coarse{1.0, {}};
    for (std::size_t j = 0; j <= 2 * N; j += 2) coarse.values.push_back(fine.values[j]);
    const double delta = 0.01;
    const auto V = [](double a) { return a; };
    const double a = local_time(coarse, delta).integrate(V);
    const double b = local_time(fine, delta / 2.0).integrate(V);
    CHECK(std::abs(a - b) < 2.0 * (delta + 1.0 / N));
  }
}

TEST_CASE("functionals of zero paths") {
  const double t = 0.8, u = 1.3, delta = 0.05, beta = 2.0;
  const auto X = constant_path(0.0, t, 16);
  const auto Y = constant_path(0.0, u, 16);
  const auto f = functionals(X, Y, local_time(X, delta), local_time(Y, delta), 0.0, 0.0, beta,
                             BoundaryCondition::robin(0.0));
  CHECK(f.A == 0.0);
  CHECK(f.C == doctest::Approx((t * t + u * u) / (2.0 * beta * delta)));
  CHECK(f.D == doctest::Approx(t * u / (beta * delta)));
}

TEST_CASE("functionals: disjoint supports, Dirichlet indicator, linear ramp") {
  const double delta = 0.01;
  const auto X = constant_path(0.5, 1.0, 8);
  const auto Y = constant_path(2.0, 1.0, 8);
  const auto LX = local_time(X, delta), LY = local_time(Y, delta);
  const auto dis = functionals(X, Y, LX, LY, 0.0, 0.0, 1.0, BoundaryCondition::dirichlet());
  CHECK(dis.D == 0.0);
  CHECK(dis.exp_B() == 1.0);
  const auto hit = functionals(X, Y, LX, LY, 0.3, 0.0, 1.0, BoundaryCondition::dirichlet());
  CHECK(hit.exp_B() == 0.0);
  CHECK(hit.exp_ABC() == 0.0);

  const auto R = ramp(0.0, 1.0, 1.0, 1000);
  const auto Z = constant_path(0.0, 1.0, 1000);
  const auto f = functionals(R, Z, local_time(R, delta), local_time(Z, delta), 0.0, 0.0, 2.0,
                             BoundaryCondition::robin(0.0));
  CHECK(std::abs(f.A + 0.25) < delta + 1e-3);
  CHECK_THROWS_AS(functionals(R, Z, local_time(R, delta), local_time(Z, 2 * delta), 0, 0, 2.0,
                              BoundaryCondition::robin(0.0)),
                  std::invalid_argument);
}

TEST_CASE("property: C, D nonnegative and exp(B) in [0, 1] for w >= 0") {
  RngStream rng(13);
  for (int rep = 0; rep < 200; ++rep) {
    const double t = 0.1 + rng.uniform(), u = 0.1 + rng.uniform();
    const double delta = 0.01, eps = 0.01;
    const auto X = sample_reflected_bridge(rng.uniform(), t, 200, rng);
    const auto Y = sample_reflected_bridge(rng.uniform(), u, 200, rng);
    const double w = rep % 3 == 0 ? 0.0 : 10.0 * rng.uniform();
    const auto b = rep % 4 == 0 ? BoundaryCondition::dirichlet() : BoundaryCondition::robin(w);
    const auto f = functionals(X, Y, local_time(X, delta), local_time(Y, delta), boundary_local_time(X, eps),
                               boundary_local_time(Y, eps), 2.0, b);
    CHECK(f.C >= 0.0);
    CHECK(f.D >= 0.0);
    CHECK(f.exp_B() >= 0.0);
    CHECK(f.exp_B() <= 1.0);
  }
}

TEST_CASE("erfcx against erfc and its large-argument expansion") {
  for (double x : {-3.0, -0.5, 0.0, 0.7, 2.0, 5.0, 10.0})
    CHECK(erfcx(x) == doctest::Approx(std::exp(x * x) * std::erfc(x)).epsilon(1e-12));
  for (double x : {30.0, 100.0, 1e4}) {
    const double series = (1.0 - 1.0 / (2.0 * x * x) + 3.0 / (4.0 * std::pow(x, 4))) / (x * std::sqrt(std::numbers::pi));
    CHECK(erfcx(x) == doctest::Approx(series).epsilon(1e-9));
  }
}

TEST_CASE("boundary weight: Neumann, Dirichlet and touching paths") {
  const BridgePath p{1.0, {0.4, 0.1, 0.9, 0.3}};
  CHECK(boundary_log_weight(p, BoundaryCondition::robin(0.0)) == 0.0);
  double expected = 0.0;
  for (std::size_t j = 0; j + 1 < p.values.size(); ++j)
    expected += std::log(std::tanh(p.values[j] * p.values[j + 1] / (1.0 / 3.0)));
  CHECK(boundary_log_weight(p, BoundaryCondition::dirichlet()) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(boundary_log_weight(p, BoundaryCondition::robin(1e9)) == doctest::Approx(expected).epsilon(1e-6));
  CHECK(boundary_log_weight(BridgePath{1.0, {0.0, 0.5}}, BoundaryCondition::dirichlet()) == -std::numeric_limits<double>::infinity());
  // Far from the wall the factor is 1 to rounding.
  CHECK(boundary_log_weight(constant_path(8.0, 1.0, 10), BoundaryCondition::robin(3.0)) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("boundary weight: single step equals the Robin/reflected kernel ratio") {
  for (double w : {0.3, 1.0, 5.0, 40.0})
    for (double dt : {0.01, 0.5})
      for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{0.05, 0.2}, std::pair{0.5, 0.1}, std::pair{1.0, 1.5}}) {
        const double ratio = oracle::robin_kernel(a, b, dt, w) / oracle::reflected_kernel(a, b, dt);
        CAPTURE(w);
        CAPTURE(dt);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(std::exp(boundary_log_weight(BridgePath{dt, {a, b}}, BoundaryCondition::robin(w))) ==
              doctest::Approx(ratio).epsilon(1e-8));
      }
}

TEST_CASE("boundary weight: scaling w") {
  const BridgePath p{0.8, {0.2, 0.05, 0.3}};
  CHECK(boundary_log_weight(p, BoundaryCondition::robin(0.5), 4.0) ==
        doctest::Approx(boundary_log_weight(p, BoundaryCondition::robin(2.0))).epsilon(1e-14));
  CHECK(boundary_log_weight(p, BoundaryCondition::dirichlet(), 4.0) ==
        boundary_log_weight(p, BoundaryCondition::dirichlet()));
  CHECK_THROWS_AS(boundary_log_weight(p, BoundaryCondition::robin(1.0), -1.0), std::invalid_argument);
}

TEST_CASE("property: boundary weight is consistent under refinement") {
  // Tower property: averaging the fine-grid weight over reflected bridges
  // through a single coarse step reproduces the coarse weight.
  RngStream rng(31);
  const std::size_t n = 40000;
  for (const auto bc : {BoundaryCondition::robin(2.0), BoundaryCondition::dirichlet()}) {
    for (double x : {0.05, 0.2, 0.6}) {
      std::vector<double> fine(n);
      for (auto& v : fine) v = std::exp(boundary_log_weight(sample_reflected_bridge(x, 0.5, 16, rng), bc));
      const auto m = stats::mean_stderr(fine);
      const double coarse = std::exp(boundary_log_weight(BridgePath{0.5, {x, x}}, bc));
      CAPTURE(x);
      CHECK(std::abs(m.mean - coarse) < 4.0 * m.stderr);
    }
  }
}
