/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fockcheck/geometry.hpp"
#include "fockcheck/logvalue.hpp"
#include "fockcheck/quadrature.hpp"
#include "fockcheck/sets.hpp"

namespace fockcheck {

// base · (2π)^two_pi_power · sqrt(sqrt_num / sqrt_den). The symbolic part
// multiplies exactly, so identical prefactors reached by different routes
// evaluate to identical doubles.
struct Coefficient {
  std::complex<double> base{1.0, 0.0};
  int two_pi_power = 0;
  std::int64_t sqrt_num = 1;
  std::int64_t sqrt_den = 1;

  static Coefficient of(std::complex<double> z) { return {z}; }
  static Coefficient inv_sqrt(std::int64_t n) { return {{1.0, 0.0}, 0, 1, n}; }
  static Coefficient sqrt_of(std::int64_t n) { return {{1.0, 0.0}, 0, n, 1}; }

  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator-() const { return {-base, two_pi_power, sqrt_num, sqrt_den}; }
  LogValue log_value() const;
  std::complex<double> value() const { return log_value().value(); }
  bool operator==(const Coefficient&) const = default;
};

enum class FactorKind { Gaussian, RadialPower, SetIndicator, BallCutoff, PnPower };

// Images of the old coordinates in a new sector, used to remap arguments.
struct Substitution {
  int new_sector = 0;
  std::vector<AffineCoordMap> images;  // old photons, then old fermion

  static Substitution insertion(int old_sector, int slot);  // Â⁺: drop k_slot, p -> p + k_slot
  static Substitution permutation(const std::vector<int>& perm);  // old slot s -> perm[s]
  static Substitution identity(int sector);
};

AffineCoordMap substitute(const AffineCoordMap& m, const Substitution& s);

struct Factor {
  FactorKind kind = FactorKind::Gaussian;
  double param = 0;        // σ (Gaussian), exponent (RadialPower, PnPower)
  double log_lo = 0;       // BallCutoff: e^log_lo ≤ |x| < e^log_hi
  double log_hi = 0;
  AffineCoordMap map;      // Gaussian, RadialPower, BallCutoff
  SetPredicate pred;       // SetIndicator
  std::vector<int> slots;  // photon slots read by SetIndicator and PnPower
  int pn_index = 0;        // PnPower: the n of p_n

  static Factor gaussian(double sigma, AffineCoordMap m);
  static Factor radial_power(double a, AffineCoordMap m);
  static Factor indicator(SetPredicate p, std::vector<int> slots);
  static Factor ball_cutoff(double log_lo, double log_hi, AffineCoordMap m);
  static Factor pn_power(int n, double exponent, std::vector<int> slots);

  bool singular() const { return kind == FactorKind::RadialPower && param < 0.0; }
  LogValue evaluate(const ConfigPoint& x) const;
  Factor substitute(const Substitution& s) const;
  // True when the factor's value can change with photon slot `slot`.
  bool reads_photon(int slot, int sector) const;
  bool operator==(const Factor&) const = default;
};

struct Term {
  Coefficient coefficient;
  std::vector<Factor> factors;

  LogValue evaluate(const ConfigPoint& x) const;
  Term substitute(const Substitution& s) const;
};

struct IntegratedTerm;

struct SectorFunction {
  int sector = 0;
  std::vector<Term> terms;
  std::vector<IntegratedTerm> integrated;

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  SectorFunction scaled(const Coefficient& c) const;
};

// coefficient · ∏outer(x) · ∫ dk |k|^weight_exponent inner(y with k at slot; p + shift_sign·k)
// where y is x read through `args`.
struct IntegratedTerm {
  Coefficient coefficient;
  std::vector<Factor> outer;
  std::shared_ptr<const Term> inner;  // term of sector inner_sector
  int inner_sector = 0;
  int slot = 0;
  double weight_exponent = -0.5;
  int shift_sign = -1;
  std::vector<AffineCoordMap> args;  // inner_sector-1 photons, then fermion, over x
  QuadratureSpec quad;

  LogValue evaluate(const ConfigPoint& x) const;
  IntegratedTerm substitute(const Substitution& s) const;
};

LogValue evaluate_log(const SectorFunction& f, const ConfigPoint& x);
std::complex<double> evaluate(const SectorFunction& f, const ConfigPoint& x);

SectorFunction add(const SectorFunction& a, const SectorFunction& b);
SectorFunction substitute(const SectorFunction& f, const Substitution& s);

// (1/n!) Σ over photon permutations; n ≤ 6.
class capability_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
SectorFunction symmetrize(const SectorFunction& f, bool normalized = true);

// Gaussians of width σ on every coordinate, each cut off at |x| < R.
SectorFunction make_base_chi(int m, double support_radius, double sigma);

struct FockState {
  std::map<int, SectorFunction> sectors;

  const SectorFunction* find(int n) const;
  std::vector<int> support() const;
};

// Point with n photons read from the native argument maps of an integrated term.
ConfigPoint remap_point(const std::vector<AffineCoordMap>& args, const ConfigPoint& x);

}  // namespace fockcheck
