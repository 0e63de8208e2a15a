/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <functional>
#include <vector>

namespace fockcheck {

struct QuadratureSpec {
  int radial_order = 24;
  int radial_panels = 4;
  int angular_order = 12;            // Gauss points in cos θ; 2x as many in φ
  double tolerance = 1e-10;          // adaptive 1D rules
  double truncation_radius = 12.0;   // unbounded integrands without an indicator

  void validate() const;
  bool operator==(const QuadratureSpec&) const = default;
};

struct Rule {
  std::vector<double> x, w;
};

// Gauss-Legendre nodes on [a, b].
Rule gauss_legendre(int order, double a, double b);
// Gauss-Legendre in cos θ times the trapezoid rule in φ; weights sum to 4π.
struct SphereRule {
  std::vector<double> x, y, z, w;
};
SphereRule sphere_rule(int order);

struct AdaptiveResult {
  double value = 0;
  double abs_error = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod on [a, b]; a singular endpoint is handled by extrapolation.
AdaptiveResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                double rel_tol);
// Adaptive rule on [a, +inf).
AdaptiveResult integrate_upper(const std::function<double(double)>& f, double a, double rel_tol);

}  // namespace fockcheck
