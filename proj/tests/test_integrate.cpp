/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <doctest.h>

#include "fockcheck/integrate.hpp"

using namespace fockcheck;

TEST_CASE("Monte Carlo norm of a Gaussian is within 3 SE of (pi sigma^2)^{3/2} per coordinate") {
  SectorFunction f;
  f.sector = 1;
  f.terms.push_back({Coefficient{},
                     {Factor::gaussian(0.8, AffineCoordMap::photon(1, 0)), Factor::gaussian(1.0, AffineCoordMap::fermion(1))}});
  const MCEstimate e = mc_norm_sq(f, *gaussian_proposal(1, 0.9), 9, {20000, 1});
  const double exact = std::pow(kPi * 0.64, 1.5) * std::pow(kPi, 1.5);
  CHECK(std::abs(e.value().real() - exact) <= 3.0 * e.error());
  CHECK(e.error() < 0.05 * exact);
}

TEST_CASE("estimates do not depend on the thread count") {
  const SectorFunction f = make_base_chi(1, 1.0, 1.0);
  const ProposalPtr q = gaussian_proposal(1, 1.0);
  const MCEstimate a = mc_norm_sq(f, *q, 5, {5000, 1});
  const MCEstimate b = mc_norm_sq(f, *q, 5, {5000, 3});
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("inner products are exact conjugates when the arguments swap") {
  const SectorFunction f = make_base_chi(1, 1.0, 1.0);
  SectorFunction g = make_base_chi(1, 2.0, 0.7);
  g = g.scaled(Coefficient::of({0.0, 1.0}));
  const ProposalPtr q = gaussian_proposal(1, 1.0);
  const MCEstimate a = mc_inner(f, g, *q, 1, {2000, 1});
  const MCEstimate b = mc_inner(g, f, *q, 1, {2000, 1});
  CHECK(a.mean == std::conj(b.mean));
}

TEST_CASE("combined estimates add means and errors in quadrature") {
  MCEstimate a, b;
  a.mean = 1.0;
  a.std_error = 3.0;
  b.mean = 2.0;
  b.std_error = 4.0;
  const MCEstimate c = combine({a, b});
  CHECK(c.value().real() == doctest::Approx(3.0));
  CHECK(c.error() == doctest::Approx(5.0));
}

TEST_CASE("closed shell integral matches quadrature") {
  for (double p : {1.0, 7.38905609893065, 50.0}) {
    const AdaptiveResult q = shell_integral_quadrature(p);
    CHECK(q.value == doctest::Approx(closed_shell_integral(p)).epsilon(1e-10));
  }
  CHECK_THROWS(closed_shell_integral(-1.0));
}

TEST_CASE("reference radial integrals") {
  const std::vector<ReferenceIntegral> r = reference_radial_integrals();
  REQUIRE(r.size() == 3);
  CHECK(r[0].computed == doctest::Approx(2.0 * kPi).epsilon(1e-10));
  CHECK(r[1].computed == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-10));
  // ∫ 4π (k²+1)^{-4} dk = 5π²/8 = 6.16850275068085.
  CHECK(r[2].computed == doctest::Approx(6.16850275068085).epsilon(1e-10));
  CHECK(r[2].computed < 5.0 * kPi);
}

TEST_CASE("chi step samples follow the declared density on the shell") {
  ChiStep st;
  st.inner = gaussian_proposal(0, 1.0);
  st.small_slot = 0;
  st.shell_n = 2;
  const ProposalPtr q = chi_step_proposal(st);
  CHECK(q->sector() == 2);
  Stream rng(4);
  for (int i = 0; i < 200; ++i) {
    const ConfigPoint x = q->sample(rng);
    CHECK(std::isfinite(q->log_density(x)));
    CHECK(in_E_n(x.photons));
  }
}
