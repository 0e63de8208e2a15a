/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <doctest.h>

#include "fockcheck/operators.hpp"

using namespace fockcheck;

namespace {

ConfigPoint point(std::vector<MomentumVector> k, MomentumVector p) {
  std::vector<Coord> c;
  for (const MomentumVector& v : k) c.push_back(Coord::linear(v));
  return ConfigPoint::make(std::move(c), p);
}

SectorFunction gaussian_photon() {
  SectorFunction f;
  f.sector = 1;
  f.terms.push_back({Coefficient{}, {Factor::gaussian(1.0, AffineCoordMap::photon(1, 0))}});
  return f;
}

}  // namespace

TEST_CASE("A+ on the vacuum Gaussian matches the formula") {
  const SectorFunction f = make_base_chi(0, 10.0, 1.0);
  const SectorFunction g = apply_A_plus(f);
  CHECK(g.sector == 1);
  // |k|^{-1/2} exp(-|p + k|²/2).
  const MomentumVector k{0.5, 0.0, 0.0}, p{0.1, 0.2, 0.0};
  const double expected = std::pow(0.5, -0.5) * std::exp(-0.5 * (0.36 + 0.04));
  CHECK(evaluate(g, point({k}, p)).real() == doctest::Approx(expected));
}

TEST_CASE("A- of a radial Gaussian matches the gamma-function value") {
  // ∫ |k|^{-1/2} e^{-|k|²/2} dk = 4π 2^{1/4} Γ(5/4) = 13.5452943380852...
  const QuadratureSpec quad{24, 4, 8, 1e-12, 12.0};
  const SectorFunction g = apply_A_minus(gaussian_photon(), quad);
  CHECK(g.sector == 0);
  CHECK(evaluate(g, point({}, {0.3, 0.0, 0.0})).real() == doctest::Approx(13.5452943380852).epsilon(1e-8));
}

TEST_CASE("chi term counts follow the double factorial") {
  CHECK(chi_term_count(0, 2) == 1);
  CHECK(chi_term_count(0, 4) == 3);
  CHECK(chi_term_count(0, 6) == 15);
  CHECK(chi_term_count(1, 5) == 8);
}

TEST_CASE("chi sequence populates sectors of the parity of m") {
  ChiRecursionSpec s;
  s.m = 0;
  s.base = make_base_chi(0, 1.0, 1.0);
  s.n_max = 4;
  const ChiSequence seq = build_chi_sequence(s);
  CHECK(seq.state.support() == std::vector<int>{0, 2, 4});
  CHECK(seq.split.at(4).size() == 3);
  CHECK(seq.state.sectors.at(4).terms.size() == 3);
  s.n_max = 3;
  CHECK_THROWS_AS(build_chi_sequence(s), std::invalid_argument);
}

TEST_CASE("the closed shell form cancels A+ chi_m on D complement") {
  ChiRecursionSpec s;
  s.m = 0;
  s.base = make_base_chi(0, 1.0, 1.0);
  s.d_kind = DomainKind::Ball;
  s.log_R_prime = std::log(2.0);
  s.n_max = 2;
  const ChiSequence seq = build_chi_sequence(s);
  const SectorFunction down = apply_A_minus_term(seq.state.sectors.at(2), 1, QuadratureSpec{});
  CHECK(down.integrated.empty());
  const SectorFunction up = apply_A_plus(seq.state.sectors.at(0));
  for (double r : {2.5, 3.0, 5.0}) {
    ConfigPoint x = point({{r, 0, 0}}, {0.2 - r, 0.1, 0.0});
    const LogValue sum = evaluate_log(down, x) + evaluate_log(up, x);
    CHECK(sum.is_zero());
  }
  // Inside D the Â⁺ image survives.
  ConfigPoint x = point({{1.0, 0, 0}}, {-0.8, 0.1, 0.0});
  CHECK_FALSE((evaluate_log(down, x) + evaluate_log(up, x)).is_zero());
}

TEST_CASE("cutoff A+ vanishes outside the annulus") {
  const SectorFunction f = make_base_chi(0, 10.0, 1.0);
  const SectorFunction g = apply_cutoff_A_plus(f, CutoffSpec{2.0, 1.0});
  CHECK(evaluate(g, point({{0.4, 0, 0}}, {-0.4, 0, 0})) == std::complex<double>{});
  CHECK(evaluate(g, point({{1.0, 0, 0}}, {-1.0, 0, 0})).real() == doctest::Approx(1.0));
  CHECK(evaluate(g, point({{2.0, 0, 0}}, {-2.0, 0, 0})) == std::complex<double>{});
}

TEST_CASE("T projections split sectors") {
  FockState psi;
  psi.sectors[0] = make_base_chi(0, 1.0, 1.0);
  psi.sectors[2] = make_base_chi(2, 1.0, 1.0);
  const FockState t = project_T(psi), tc = project_T_complement(psi);
  CHECK(t.sectors.at(0).empty());
  CHECK_FALSE(tc.sectors.at(0).empty());
}

TEST_CASE("H0 multiplies by the total momentum magnitude") {
  FockState psi;
  psi.sectors[1] = gaussian_photon();
  const FockState h = apply_H0(psi);
  const ConfigPoint x = point({{3.0, 4.0, 0.0}}, {0.0, 0.0, 2.0});
  CHECK(evaluate(h.sectors.at(1), x).real() == doctest::Approx(7.0 * std::exp(-12.5)));
}
