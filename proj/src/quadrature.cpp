/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "fockcheck/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "fockcheck/geometry.hpp"

namespace fockcheck {

void QuadratureSpec::validate() const {
  if (radial_order < 2 || angular_order < 2 || radial_panels < 1)
    throw std::invalid_argument("quadrature orders must be at least 2");
  if (!(tolerance > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  if (!(truncation_radius > 0.0)) throw std::invalid_argument("truncation radius must be positive");
}

namespace {

struct TableDeleter {
  void operator()(gsl_integration_glfixed_table* t) const { gsl_integration_glfixed_table_free(t); }
};

// Reference nodes on [-1, 1], cached per order.
const Rule& reference_rule(int order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Rule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return *it->second;
  std::unique_ptr<gsl_integration_glfixed_table, TableDeleter> t(
      gsl_integration_glfixed_table_alloc(static_cast<size_t>(order)));
  auto r = std::make_unique<Rule>();
  for (int i = 0; i < order; ++i) {
    double xi = 0, wi = 0;
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<size_t>(i), &xi, &wi, t.get());
    r->x.push_back(xi);
    r->w.push_back(wi);
  }
  return *cache.emplace(order, std::move(r)).first->second;
}

struct GslGuard {
  gsl_error_handler_t* old;
  GslGuard() : old(gsl_set_error_handler_off()) {}
  ~GslGuard() { gsl_set_error_handler(old); }
};

double trampoline(double x, void* p) { return (*static_cast<const std::function<double(double)>*>(p))(x); }

}  // namespace

Rule gauss_legendre(int order, double a, double b) {
  const Rule& ref = reference_rule(order);
  Rule r;
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  for (int i = 0; i < order; ++i) {
    r.x.push_back(c + h * ref.x[i]);
    r.w.push_back(h * ref.w[i]);
  }
  return r;
}

SphereRule sphere_rule(int order) {
  const Rule& ct = reference_rule(order);
  const int nphi = 2 * order;
  SphereRule s;
  for (int i = 0; i < order; ++i) {
    const double z = ct.x[i];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < nphi; ++j) {
      const double phi = kTwoPi * (j + 0.5) / nphi;
      s.x.push_back(rho * std::cos(phi));
      s.y.push_back(rho * std::sin(phi));
      s.z.push_back(z);
      s.w.push_back(ct.w[i] * kTwoPi / nphi);
    }
  }
  return s;
}

AdaptiveResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                double rel_tol) {
  GslGuard guard;
  const size_t limit = 2000;
  gsl_integration_workspace* ws = gsl_integration_workspace_alloc(limit);
  gsl_function F{&trampoline, const_cast<std::function<double(double)>*>(&f)};
  AdaptiveResult r;
  const int status = gsl_integration_qags(&F, a, b, 0.0, rel_tol, limit, ws, &r.value, &r.abs_error);
  gsl_integration_workspace_free(ws);
  r.converged = status == GSL_SUCCESS;
  return r;
}

AdaptiveResult integrate_upper(const std::function<double(double)>& f, double a, double rel_tol) {
  GslGuard guard;
  const size_t limit = 2000;
  gsl_integration_workspace* ws = gsl_integration_workspace_alloc(limit);
  gsl_function F{&trampoline, const_cast<std::function<double(double)>*>(&f)};
  AdaptiveResult r;
  const int status = gsl_integration_qagiu(&F, a, 0.0, rel_tol, limit, ws, &r.value, &r.abs_error);
  gsl_integration_workspace_free(ws);
  r.converged = status == GSL_SUCCESS;
  return r;
}

}  // namespace fockcheck
