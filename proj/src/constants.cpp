/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <limits>

#include "fockcheck/verify.hpp"

namespace fockcheck {

namespace {

// Terms of Σ_{n even ≥ 2} pre(n) ∏_{j=2,4..n} factor(j) until they drop below
// 1e-20 of the running sum.
std::vector<double> series_terms(double (*pre)(int), double (*factor)(int)) {
  std::vector<double> t;
  double prod = 1.0, sum = 0.0;
  for (int n = 2; n <= 400; n += 2) {
    prod *= factor(n);
    const double term = pre(n) * prod;
    t.push_back(term);
    sum += term;
    if (term < 1e-20 * sum) break;
  }
  return t;
}

double sum_in_order(const std::vector<double>& t, bool backward) {
  double s = 0.0;
  if (backward)
    for (auto it = t.rbegin(); it != t.rend(); ++it) s += *it;
  else
    for (double x : t) s += x;
  return s;
}

}  // namespace

double constant_C1(bool backward, int* terms) {
  const std::vector<double> t = series_terms([](int n) { return 8.0 * kPi * n * n; },
                                             [](int j) { return 10.0 * kPi * kPi * j * std::exp(-2.0 * j); });
  if (terms) *terms = static_cast<int>(t.size());
  return sum_in_order(t, backward);
}

double constant_C2(bool backward, int* terms) {
  const std::vector<double> t = series_terms([](int) { return 1.0; },
                                             [](int j) { return kTwoPi * kTwoPi * j * std::exp(-2.0 * j); });
  if (terms) *terms = static_cast<int>(t.size());
  // The leading 1 joins last in both orders.
  return sum_in_order(t, backward) + 1.0;
}

double epsilon3_smallN(int N, int max_index) {
  if (N < 1 || N > 3) throw std::invalid_argument("epsilon3 is estimated for N in 1..3");
  if (max_index < 1) throw std::invalid_argument("index range must include 1");
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> i(N, 0);
  while (true) {
    double log_p = N + 1.0;
    for (int v : i) log_p += 2.0 * std::log1p(static_cast<double>(v) * v);
    if (log_p < 700.0) {
      const double p = std::exp(log_p);
      for (int n = 0; n < N; ++n) {
        if (i[n] == 0) continue;  // ln(1) = 0
        const double l = 0.5 * std::log(2.0) + 6.0 * std::log(N + 1.0) + std::log(i[n] + 1.0) +
                         0.5 * std::log(std::log(i[n] + 1.0)) - 0.5 * log_p - p;
        best = std::max(best, l);
      }
    }
    int d = 0;
    while (d < N && ++i[d] > max_index) i[d++] = 0;
    if (d == N) break;
  }
  return std::exp(best);
}

ConstantEstimates estimate_constants(int N_small, int max_index) {
  ConstantEstimates c;
  c.C1_forward = constant_C1(false, &c.series_terms);
  c.C1_backward = constant_C1(true);
  c.C1 = c.C1_forward;
  c.C2_forward = constant_C2(false);
  c.C2_backward = constant_C2(true);
  c.C2 = c.C2_forward;
  c.C3_N = N_small;
  c.C3_max_index = max_index;
  c.epsilon3 = epsilon3_smallN(N_small, max_index);
  const double r = 1.0 - std::sqrt(c.epsilon3);
  c.C3_smallN = r * r;
  return c;
}

}  // namespace fockcheck
