/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <doctest.h>

#include "fockcheck/sets.hpp"

using namespace fockcheck;

namespace {
Coord at(double r) { return Coord::linear({r, 0.0, 0.0}); }
Coord at_log(double L) { return Coord::radial({0.0, 0.0, 1.0}, L); }
}  // namespace

TEST_CASE("p_n at the origin is e^n") {
  CHECK(p_n(2, {at(0.0)}).value == doctest::Approx(std::exp(2.0)));
  CHECK(p_n(3, {at(0.0), at(0.0)}).log_value == doctest::Approx(3.0));
  // (1² + 1)² = 4.
  CHECK(p_n(2, {at(1.0)}).value == doctest::Approx(4.0 * std::exp(2.0)));
  CHECK(p_prime_n(2, {1.0}).value == doctest::Approx(4.0 * std::exp(2.0)));
}

TEST_CASE("p_n overflow is flagged and closes the shell") {
  const PnValue p = p_n(3, {at(0.0), at_log(400.0)});
  CHECK(p.overflow);
  CHECK(std::isinf(p.value));
  CHECK(std::isfinite(p.log_value));
  CHECK_FALSE(in_E_n({at(0.0), at_log(400.0), at_log(1e300)}));
}

TEST_CASE("E_n edges are excluded") {
  const double p = std::exp(2.0);
  CHECK_FALSE(in_E_n({at(0.0), at_log(p / 2.0)}));
  CHECK_FALSE(in_E_n({at(0.0), at_log(p)}));
  CHECK(in_E_n({at(0.0), at_log(0.75 * p)}));
}

TEST_CASE("F_2 is symmetric in its arguments") {
  const double p = std::exp(2.0);
  CHECK(in_F_n({at(0.0), at_log(0.75 * p)}));
  CHECK(in_F_n({at_log(0.75 * p), at(0.0)}));
  CHECK_FALSE(in_F_n({at(0.5), at(0.5)}));
}

TEST_CASE("fast and brute-force F_n agree on constructed points") {
  Stream rng(11);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 300; ++t) {
      std::vector<Coord> k = sample_F_n(rng, n, 1.0).point.photons;
      if (t % 2) k[rng.below(n)] = at(rng.uniform());
      CHECK(in_F_n(k) == in_F_n_bruteforce(k));
    }
  }
}

TEST_CASE("constructed F_n samples are members") {
  Stream rng(13);
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 100; ++t) CHECK(in_F_n(sample_F_n(rng, n, 1.0).point.photons));
}

TEST_CASE("X annuli are half-open") {
  CHECK(in_X({1}, {at(1.0)}));
  CHECK_FALSE(in_X({1}, {at(2.0)}));
  CHECK(in_X({0, 2}, {at(0.0), at(2.5)}));
}

TEST_CASE("disjointness scan finds nothing and the mutation finds violations") {
  CHECK(disjointness_witness_scan(42, 3, 5000) == 0);
  CHECK(disjointness_witness_scan(42, 4, 5000) == 0);
  CHECK(disjointness_witness_scan(42, 3, 5000, 0.5) > 0);
}

TEST_CASE("predicate complement flips membership") {
  const std::vector<Coord> k{at(0.0), at_log(0.75 * std::exp(2.0))};
  const SetPredicate f = SetPredicate::F(2);
  CHECK(f.contains(k));
  CHECK_FALSE(f.complement().contains(k));
  CHECK(SetPredicate::D_ball(2, std::log(2.0)).contains({at(1.0), at(1.9)}));
  CHECK_FALSE(SetPredicate::D_ball(2, std::log(2.0)).contains({at(1.0), at(2.1)}));
}
