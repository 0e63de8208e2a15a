/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <doctest.h>

#include "fockcheck/serialize.hpp"
#include "fockcheck/states.hpp"

using namespace fockcheck;

namespace {

ConfigPoint point(std::vector<MomentumVector> k, MomentumVector p) {
  std::vector<Coord> c;
  for (const MomentumVector& v : k) c.push_back(Coord::linear(v));
  return ConfigPoint::make(std::move(c), p);
}

SectorFunction asymmetric() {
  Term t;
  AffineCoordMap a = AffineCoordMap::photon(2, 0);
  a.shift = {0.3, 0.0, 0.0};
  t.factors.push_back(Factor::gaussian(0.7, a));
  t.factors.push_back(Factor::gaussian(1.3, AffineCoordMap::photon(2, 1)));
  t.factors.push_back(Factor::gaussian(1.0, AffineCoordMap::fermion(2)));
  SectorFunction f;
  f.sector = 2;
  f.terms.push_back(t);
  return f;
}

}  // namespace

TEST_CASE("symbolic coefficients multiply exactly") {
  const Coefficient c = Coefficient::inv_sqrt(2) * Coefficient::inv_sqrt(2);
  CHECK(c.value().real() == doctest::Approx(0.5));
  const Coefficient d = Coefficient::inv_sqrt(6) * Coefficient::sqrt_of(6);
  CHECK(d.value().real() == doctest::Approx(1.0));
  CHECK((-d).value().real() == doctest::Approx(-1.0));
}

TEST_CASE("base chi is a cut-off Gaussian") {
  const SectorFunction f = make_base_chi(1, 1.0, 1.0);
  CHECK(evaluate(f, point({{0.5, 0, 0}}, {0, 0.5, 0})).real() == doctest::Approx(std::exp(-0.25)));
  CHECK(evaluate(f, point({{1.5, 0, 0}}, {0, 0, 0})) == std::complex<double>{});
  CHECK_THROWS_AS(make_base_chi(0, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("a sum and its negation cancel to an exact zero") {
  const SectorFunction f = asymmetric();
  const SectorFunction g = add(f, f.scaled(Coefficient::of(-1.0)));
  CHECK(evaluate_log(g, point({{0.1, 0.2, 0.3}, {0.4, 0.5, 0.6}}, {0.7, 0.8, 0.9})).is_zero());
}

TEST_CASE("insertion drops a photon and shifts the fermion") {
  // f(k; p) = exp(-|p|²/2); after insertion at slot 0: exp(-|p + k_0|²/2).
  SectorFunction f;
  f.sector = 0;
  f.terms.push_back({Coefficient{}, {Factor::gaussian(1.0, AffineCoordMap::fermion(0))}});
  const SectorFunction g = substitute(f, Substitution::insertion(0, 0));
  CHECK(g.sector == 1);
  CHECK(evaluate(g, point({{1.0, 0, 0}}, {-1.0, 0, 0})).real() == doctest::Approx(1.0));
}

TEST_CASE("symmetrizer averages photon permutations") {
  const SectorFunction f = asymmetric();
  const SectorFunction s = symmetrize(f);
  const ConfigPoint x = point({{0.1, 0.2, 0.3}, {0.4, -0.5, 0.6}}, {0.7, 0.8, 0.9});
  const ConfigPoint y = point({{0.4, -0.5, 0.6}, {0.1, 0.2, 0.3}}, {0.7, 0.8, 0.9});
  CHECK(evaluate(s, x).real() == doctest::Approx(0.5 * (evaluate(f, x) + evaluate(f, y)).real()));
  CHECK(evaluate(s, x).real() == doctest::Approx(evaluate(s, y).real()));
  CHECK(evaluate(symmetrize(f, false), x).real() == doctest::Approx(2.0 * evaluate(s, x).real()));
}

TEST_CASE("serialized states evaluate identically") {
  FockState psi;
  psi.sectors[0] = make_base_chi(0, 1.0, 1.0);
  psi.sectors[2] = asymmetric();
  const std::string text = to_json(psi).dump();
  const FockState back = state_from_json(nlohmann::json::parse(text));
  CHECK(back.support() == psi.support());
  const ConfigPoint x = point({{0.1, 0.2, 0.3}, {0.4, -0.5, 0.6}}, {0.7, 0.8, 0.9});
  CHECK(evaluate(back.sectors.at(2), x) == evaluate(psi.sectors.at(2), x));
  CHECK(to_json(back).dump() == text);
}

TEST_CASE("unknown factor kinds are rejected") {
  CHECK_THROWS(factor_from_json(nlohmann::json{{"kind", "banana"}}));
}
