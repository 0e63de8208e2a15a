/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fockcheck/rng.hpp"

namespace fockcheck {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kLog4Pi = 2.5310242469692907;  // ln(4π)

// Above this log-magnitude a coordinate is never expanded to linear form.
constexpr double kLinearLogLimit = 300.0;

struct MomentumVector {
  double x = 0, y = 0, z = 0;

  MomentumVector operator+(const MomentumVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
  MomentumVector operator-(const MomentumVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
  MomentumVector operator*(double s) const { return {x * s, y * s, z * s}; }
  bool operator==(const MomentumVector&) const = default;
};

double norm(const MomentumVector& v);
double norm_sq(const MomentumVector& v);

struct LogRadialVector {
  MomentumVector direction;  // |direction| = 1
  double logMagnitude = 0;
};

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A single momentum coordinate in either representation.
struct Coord {
  bool log_form = false;
  MomentumVector v;  // the vector, or the unit direction when log_form
  double L = 0;      // ln|k| when log_form

  static Coord linear(const MomentumVector& m) { return {false, m, 0.0}; }
  static Coord radial(const LogRadialVector& r) { return {true, r.direction, r.logMagnitude}; }
  static Coord radial(const MomentumVector& dir, double L) { return {true, dir, L}; }
};

double log_norm(const MomentumVector& v);
double log_norm(const LogRadialVector& v);
double log_norm(const Coord& c);
// ln(|k|^2 + 1), accurate for both tiny and doubly-exponential |k|.
double log_sq_plus_one(const Coord& c);
// Linear form; components overflow to ±inf past the double range.
MomentumVector to_linear(const Coord& c);
LogRadialVector to_log_radial(const MomentumVector& v);

// Coefficients over (photon_0 .. photon_{n-1}, fermion) plus a constant shift.
struct AffineCoordMap {
  std::vector<int> coef;
  MomentumVector shift;

  static AffineCoordMap photon(int n, int slot);
  static AffineCoordMap fermion(int n);
  int sector() const { return static_cast<int>(coef.size()) - 1; }
  bool operator==(const AffineCoordMap&) const = default;
};

// The fermion slot is kept as base + Σ c_i k_i so that large photon momenta
// cancel exactly when a factor reads p + k_i.
struct ConfigPoint {
  std::vector<Coord> photons;
  MomentumVector fermion_base;
  std::vector<int> fermion_coef;
  // Fermion contributions from coordinates that are not photons of this point.
  std::vector<std::pair<int, Coord>> fermion_extra;

  int sector() const { return static_cast<int>(photons.size()); }
  static ConfigPoint make(std::vector<Coord> photons, const MomentumVector& p);
  // Linear fermion value; only meaningful when no huge photon is involved.
  MomentumVector fermion_linear() const;
};

// Evaluates an affine combination with exact cancellation of shared terms.
Coord apply_map(const AffineCoordMap& map, const ConfigPoint& x);

struct SampleBatch {
  std::uint64_t seed = 0;
  std::vector<std::pair<ConfigPoint, double>> points;  // (point, importance weight)
};

MomentumVector uniform_direction(Stream& rng);

// Log-uniform magnitude in [log_lo, log_hi]; weight 4π r³ (log_hi - log_lo), as a log.
struct ShellDraw {
  LogRadialVector k;
  double log_weight;
};
ShellDraw sample_log_shell(Stream& rng, double log_lo, double log_hi);
ShellDraw sample_log_shell(std::uint64_t seed, double log_lo, double log_hi);

// Density proportional to |k|^s on the shell; log_hi may be +inf when s < -3.
// log_weight is minus the log density of the draw.
ShellDraw sample_power_shell(Stream& rng, double log_lo, double log_hi, double s);
double power_shell_log_density(double L, double log_lo, double log_hi, double s);

struct BallDraw {
  MomentumVector k;
  double weight;
};
BallDraw sample_ball(Stream& rng, double radius);
BallDraw sample_ball(std::uint64_t seed, double radius);

// Sums in a fixed pairwise tree order.
double pairwise_sum(const double* v, std::size_t n);
inline double pairwise_sum(const std::vector<double>& v) { return pairwise_sum(v.data(), v.size()); }

// ln(e^a + e^b) and ln(e^a - e^b) for a >= b.
double log_add(double a, double b);
double log_sub(double a, double b);

}  // namespace fockcheck
