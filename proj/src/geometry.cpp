/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "fockcheck/geometry.hpp"

#include <limits>

namespace fockcheck {

double norm_sq(const MomentumVector& v) { return v.x * v.x + v.y * v.y + v.z * v.z; }

double norm(const MomentumVector& v) { return std::hypot(v.x, v.y, v.z); }

double log_norm(const MomentumVector& v) {
  const double n = norm(v);
  if (n == 0.0) throw domain_error("log_norm of the zero vector");
  return std::log(n);
}

double log_norm(const LogRadialVector& v) { return v.logMagnitude; }

double log_norm(const Coord& c) {
  if (c.log_form) return c.L;
  const double n = norm(c.v);
  return n == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(n);
}

double log_sq_plus_one(const Coord& c) {
  if (!c.log_form) {
    const double s = norm_sq(c.v);
    if (std::isfinite(s)) return std::log1p(s);
  }
  const double L = log_norm(c);
  if (L > 20.0) return 2.0 * L + std::log1p(std::exp(-2.0 * L));
  return std::log1p(std::exp(2.0 * L));
}

MomentumVector to_linear(const Coord& c) {
  if (!c.log_form) return c.v;
  return c.v * std::exp(c.L);
}

LogRadialVector to_log_radial(const MomentumVector& v) {
  const double n = norm(v);
  if (n == 0.0) throw domain_error("log-radial form of the zero vector");
  return {v * (1.0 / n), std::log(n)};
}

AffineCoordMap AffineCoordMap::photon(int n, int slot) {
  AffineCoordMap m;
  m.coef.assign(n + 1, 0);
  m.coef[slot] = 1;
  return m;
}

AffineCoordMap AffineCoordMap::fermion(int n) {
  AffineCoordMap m;
  m.coef.assign(n + 1, 0);
  m.coef[n] = 1;
  return m;
}

ConfigPoint ConfigPoint::make(std::vector<Coord> photons, const MomentumVector& p) {
  ConfigPoint x;
  x.fermion_coef.assign(photons.size(), 0);
  x.photons = std::move(photons);
  x.fermion_base = p;
  return x;
}

MomentumVector ConfigPoint::fermion_linear() const {
  AffineCoordMap m = AffineCoordMap::fermion(sector());
  return to_linear(apply_map(m, *this));
}

Coord apply_map(const AffineCoordMap& map, const ConfigPoint& x) {
  const int n = x.sector();
  const int cf = map.coef[n];
  // A bare photon is returned as stored, which keeps log-form radii below e^-300 exact.
  if (cf == 0 && map.shift == MomentumVector{}) {
    int slot = -1, count = 0;
    for (int i = 0; i < n; ++i)
      if (map.coef[i] != 0) slot = i, ++count;
    if (count == 1 && (map.coef[slot] == 1 || map.coef[slot] == -1)) {
      Coord c = x.photons[slot];
      if (map.coef[slot] == -1) c.v = c.v * -1.0;
      return c;
    }
  }
  MomentumVector lin = map.shift + x.fermion_base * static_cast<double>(cf);
  const Coord* huge = nullptr;
  int huge_coef = 0;
  auto take = [&](const Coord& k, int c) {
    if (c == 0) return;
    if (k.log_form && k.L > kLinearLogLimit) {
      if (huge == nullptr || k.L > huge->L) {
        huge = &k;
        huge_coef = c;
      }
      return;
    }
    lin = lin + to_linear(k) * static_cast<double>(c);
  };
  for (int i = 0; i < n; ++i) take(x.photons[i], map.coef[i] + cf * x.fermion_coef[i]);
  if (cf != 0)
    for (const auto& [c, k] : x.fermion_extra) take(k, cf * c);
  if (huge == nullptr) return Coord::linear(lin);
  // The linear remainder is negligible next to a coordinate beyond e^300.
  const double sign = huge_coef > 0 ? 1.0 : -1.0;
  return Coord::radial(huge->v * sign, huge->L + std::log(std::abs(static_cast<double>(huge_coef))));
}

MomentumVector uniform_direction(Stream& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = kTwoPi * rng.uniform();
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

ShellDraw sample_log_shell(Stream& rng, double log_lo, double log_hi) {
  if (!(log_lo < log_hi)) throw std::invalid_argument("sample_log_shell requires log_lo < log_hi");
  const MomentumVector dir = uniform_direction(rng);
  const double u = log_lo + (log_hi - log_lo) * rng.uniform();
  return {{dir, u}, kLog4Pi + 3.0 * u + std::log(log_hi - log_lo)};
}

ShellDraw sample_log_shell(std::uint64_t seed, double log_lo, double log_hi) {
  Stream rng(seed);
  return sample_log_shell(rng, log_lo, log_hi);
}

namespace {

// Log density of u on [lo, hi] proportional to e^{a u}.
double exp_law_log_density(double u, double lo, double hi, double a) {
  if (!(u >= lo && u <= hi)) return -std::numeric_limits<double>::infinity();
  if (a == 0.0) return -std::log(hi - lo);
  if (a < 0.0) return std::log(-a) + a * (u - lo) - std::log(-std::expm1(a * (hi - lo)));
  return std::log(a) - a * (hi - u) - std::log(-std::expm1(-a * (hi - lo)));
}

}  // namespace

double power_shell_log_density(double L, double log_lo, double log_hi, double s) {
  return exp_law_log_density(L, log_lo, log_hi, 3.0 + s) - kLog4Pi - 3.0 * L;
}

ShellDraw sample_power_shell(Stream& rng, double log_lo, double log_hi, double s) {
  if (!(log_lo < log_hi)) throw std::invalid_argument("sample_power_shell requires log_lo < log_hi");
  const double a = 3.0 + s;
  if (!std::isfinite(log_hi) && a >= 0.0)
    throw std::invalid_argument("unbounded shell needs a density decaying faster than |k|^-3");
  const MomentumVector dir = uniform_direction(rng);
  const double v = rng.uniform();
  const double w = log_hi - log_lo;
  double u;
  if (a == 0.0) {
    u = log_lo + w * v;
  } else if (a < 0.0) {
    u = log_lo + std::log1p(v * std::expm1(a * w)) / a;
  } else {
    u = log_hi + std::log1p(v * std::expm1(-a * w)) / a;
  }
  u = std::clamp(u, log_lo, log_hi);
  return {{dir, u}, -power_shell_log_density(u, log_lo, log_hi, s)};
}

BallDraw sample_ball(Stream& rng, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("sample_ball requires radius > 0");
  const MomentumVector dir = uniform_direction(rng);
  const double r = radius * std::cbrt(rng.uniform());
  return {dir * r, 4.0 * kPi * radius * radius * radius / 3.0};
}

BallDraw sample_ball(std::uint64_t seed, double radius) {
  Stream rng(seed);
  return sample_ball(rng, radius);
}

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

double log_sub(double a, double b) {
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log(-std::expm1(b - a));
}

}  // namespace fockcheck
