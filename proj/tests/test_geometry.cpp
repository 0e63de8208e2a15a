/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <doctest.h>

#include "fockcheck/geometry.hpp"
#include "fockcheck/quadrature.hpp"

using namespace fockcheck;

TEST_CASE("norm of a linear vector") {
  CHECK(norm({3.0, 4.0, 12.0}) == doctest::Approx(13.0));
  CHECK(norm({}) == 0.0);
}

TEST_CASE("log-radial round trip") {
  const MomentumVector v{1.0, -2.0, 2.0};
  const LogRadialVector r = to_log_radial(v);
  CHECK(r.logMagnitude == doctest::Approx(std::log(3.0)));
  const MomentumVector back = to_linear(Coord::radial(r));
  CHECK(back.x == doctest::Approx(1.0));
  CHECK(back.y == doctest::Approx(-2.0));
  CHECK(back.z == doctest::Approx(2.0));
}

TEST_CASE("ln(|k|^2+1) stays finite for doubly exponential radii") {
  const Coord huge = Coord::radial({0, 0, 1}, 1e12);
  CHECK(log_sq_plus_one(huge) == doctest::Approx(2e12));
  const Coord tiny = Coord::radial({0, 0, 1}, -400.0);
  CHECK(log_sq_plus_one(tiny) == 0.0);
  CHECK(log_sq_plus_one(Coord::linear({1, 0, 0})) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("affine fermion cancels a huge photon exactly") {
  // p = q - k with ln|k| = 1e9; the factor reads p + k = q.
  ConfigPoint x = ConfigPoint::make({Coord::radial({1, 0, 0}, 1e9)}, {0.25, 0.5, -1.0});
  x.fermion_coef[0] = -1;
  AffineCoordMap m = AffineCoordMap::fermion(1);
  m.coef[0] = 1;
  const Coord c = apply_map(m, x);
  CHECK_FALSE(c.log_form);
  CHECK(c.v == MomentumVector{0.25, 0.5, -1.0});
  // Without the cancelling photon the huge coordinate dominates.
  const Coord p = apply_map(AffineCoordMap::fermion(1), x);
  CHECK(p.log_form);
  CHECK(p.L == 1e9);
}

TEST_CASE("bare photons keep tiny log-form radii") {
  ConfigPoint x = ConfigPoint::make({Coord::radial({0, 1, 0}, -1000.0)}, {});
  const Coord c = apply_map(AffineCoordMap::photon(1, 0), x);
  CHECK(c.log_form);
  CHECK(log_norm(c) == -1000.0);
}

TEST_CASE("log_add and log_sub") {
  CHECK(log_add(std::log(2.0), std::log(3.0)) == doctest::Approx(std::log(5.0)));
  CHECK(log_sub(std::log(5.0), std::log(3.0)) == doctest::Approx(std::log(2.0)));
  CHECK(log_sub(1e6, 5e5) == doctest::Approx(1e6));
  CHECK(log_sub(2.0, 2.0) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("pairwise sum is exact on integers and order-fixed") {
  std::vector<double> v(1001);
  for (int i = 0; i < 1001; ++i) v[i] = i;
  CHECK(pairwise_sum(v) == 500500.0);
  CHECK(pairwise_sum(nullptr, 0) == 0.0);
}

TEST_CASE("uniform directions are unit vectors") {
  Stream rng(7);
  for (int i = 0; i < 100; ++i) CHECK(norm(uniform_direction(rng)) == doctest::Approx(1.0));
}

TEST_CASE("streams are pure functions of key and counter") {
  Stream a(123), b(123), c(124);
  for (int i = 0; i < 10; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x != c.uniform());
    CHECK(x > 0.0);
    CHECK(x < 1.0);
  }
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
}

TEST_CASE("power shell density integrates to one") {
  for (double s : {-5.0, -3.0, -1.0}) {
    const double lo = 2.0, hi = 4.0;
    // ∫ density · 4π r² dr over the shell, in u = ln r.
    const AdaptiveResult q = integrate_finite(
        [&](double u) { return std::exp(power_shell_log_density(u, lo, hi, s) + kLog4Pi + 3.0 * u); }, lo, hi, 1e-12);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-9));
  }
  const AdaptiveResult q = integrate_upper(
      [](double u) { return std::exp(power_shell_log_density(u, 1.0, INFINITY, -5.0) + kLog4Pi + 3.0 * u); }, 1.0,
      1e-12);
  CHECK(q.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("power shell samples stay in the shell") {
  Stream rng(3);
  for (int i = 0; i < 1000; ++i) {
    const ShellDraw d = sample_power_shell(rng, 5.0, 10.0, -5.0);
    CHECK(d.k.logMagnitude > 5.0);
    CHECK(d.k.logMagnitude < 10.0);
  }
}

TEST_CASE("ball samples stay in the ball") {
  Stream rng(5);
  for (int i = 0; i < 1000; ++i) CHECK(norm(sample_ball(rng, 2.0).k) <= 2.0);
}

TEST_CASE("shell sampling rejects empty ranges") {
  Stream rng(1);
  CHECK_THROWS_AS(sample_log_shell(rng, 2.0, 2.0), std::invalid_argument);
}
