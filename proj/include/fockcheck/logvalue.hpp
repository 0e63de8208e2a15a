/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace fockcheck {

// value = phase · e^scale with |phase| = 1, or exactly zero.
// Negation is exact, so a sum and its negated sum cancel to zero bit-for-bit.
struct LogValue {
  double scale = -std::numeric_limits<double>::infinity();
  std::complex<double> phase{0.0, 0.0};

  static LogValue zero() { return {}; }
  static LogValue one() { return {0.0, {1.0, 0.0}}; }
  static LogValue from(std::complex<double> z) {
    const double a = std::abs(z);
    if (a == 0.0) return zero();
    if (!std::isfinite(a)) return {std::numeric_limits<double>::infinity(), {1.0, 0.0}};
    return {std::log(a), z / a};
  }
  static LogValue exp_of(double log_magnitude) {
    if (log_magnitude == -std::numeric_limits<double>::infinity()) return zero();
    return {log_magnitude, {1.0, 0.0}};
  }

  bool is_zero() const { return phase == std::complex<double>(0.0, 0.0); }
  bool is_finite() const { return is_zero() || (std::isfinite(scale) && std::isfinite(phase.real()) && std::isfinite(phase.imag())); }
  double log_abs() const { return is_zero() ? -std::numeric_limits<double>::infinity() : scale; }
  std::complex<double> value() const { return is_zero() ? std::complex<double>{} : phase * std::exp(scale); }

  LogValue operator-() const { return {scale, -phase}; }

  LogValue operator*(const LogValue& o) const {
    if (is_zero() || o.is_zero()) return zero();
    LogValue r{scale + o.scale, phase * o.phase};
    const double a = std::abs(r.phase);
    r.phase /= a;
    r.scale += std::log(a);
    return r;
  }
  LogValue& operator*=(const LogValue& o) { return *this = *this * o; }

  LogValue operator+(const LogValue& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const double s = std::max(scale, o.scale);
    if (!std::isfinite(s)) return {s, phase + o.phase};
    const std::complex<double> m = phase * std::exp(scale - s) + o.phase * std::exp(o.scale - s);
    const double a = std::abs(m);
    if (a == 0.0) return zero();
    return {s + std::log(a), m / a};
  }
  LogValue& operator+=(const LogValue& o) { return *this = *this + o; }

  LogValue conj() const { return {scale, std::conj(phase)}; }
};

}  // namespace fockcheck
