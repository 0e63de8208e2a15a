/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fockcheck/integrate.hpp"
#include "fockcheck/operators.hpp"

namespace fockcheck {

enum class Status { Pass, Fail, Inconclusive };
const char* status_name(Status s);
Status worst(Status a, Status b);

// One tolerance-bearing comparison inside a check.
struct CheckItem {
  std::string label;
  Status status = Status::Pass;
  double observed = 0;
  double expected = 0;
  double std_error = 0;
  std::string rule;  // e.g. "<= expected + 3 SE", "rel 1e-8"
};

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  double observed = 0;
  double expected = 0;
  double std_error = 0;
  std::string tolerance;
  std::uint64_t seed = 0;
  double runtime_s = 0;
  std::string details;
  std::vector<CheckItem> items;

  // Adds the item and folds its status into the check status.
  void add(CheckItem item);
};

struct VerifyConfig {
  std::uint64_t seed = 42;
  int threads = 1;

  std::vector<int> set_lemma_n{3, 4};
  std::int64_t set_trials = 100000;
  std::int64_t membership_points = 10000;
  int support_points = 1000;
  int cancellation_points = 1000;

  int chi_m = 0;
  double chi_R = 1.0;
  double chi_sigma = 1.0;
  std::vector<double> R_prime_factors{2.0, 5.0, 10.0};

  std::int64_t norm_samples = 100000;
  std::int64_t bound_samples = 20000;
  std::int64_t bound_integral_samples = 2000;
  std::int64_t pairing_samples = 100000;
  std::int64_t pairing_integral_samples = 2000;
  std::int64_t symmetrizer_samples = 100000;
  std::int64_t density_samples = 100000;

  std::vector<int> cutoff_n{1, 2};
  std::vector<double> cutoff_R{2.0, 10.0};
  double cutoff_a = 1.0;

  // Quadrature attached to Â⁻ integrals inside Monte Carlo loops.
  QuadratureSpec quad{16, 2, 8, 1e-10, 12.0};

  int lower_bound_N = 1;
  int c3_max_index = 30;

  void validate() const;
};

struct ConstantEstimates {
  double C1 = 0, C1_forward = 0, C1_backward = 0;
  double C2 = 0, C2_forward = 0, C2_backward = 0;
  double C3_smallN = 0;
  double epsilon3 = 0;
  int C3_N = 1;
  int C3_max_index = 0;
  int series_terms = 0;
};

// Σ_{n even ≥ 2} 8π n² ∏_{j=2,4..n} 10π² j e^{-2j}.
double constant_C1(bool backward, int* terms = nullptr);
// 1 + Σ_{n even ≥ 2} ∏_{j=2,4..n} (2π)² j e^{-2j}.
double constant_C2(bool backward, int* terms = nullptr);
// ε₃ = sup over i ∈ {0..K}^N and n of √2 (N+1)⁶ (i_n+1) √ln(i_n+1) / (√p' e^{p'}).
double epsilon3_smallN(int N, int max_index);
ConstantEstimates estimate_constants(int N_small, int max_index);

CheckResult check_radial_integrals();
CheckResult check_set_lemma(const VerifyConfig& cfg);
CheckResult check_fast_membership(const VerifyConfig& cfg);
CheckResult check_chi_support(const VerifyConfig& cfg);
CheckResult check_cancellation(const VerifyConfig& cfg);
CheckResult check_norm_recursion(const VerifyConfig& cfg);
CheckResult check_A_minus_term_bounds(const VerifyConfig& cfg);
CheckResult check_cutoff_symmetry(const VerifyConfig& cfg);
CheckResult check_full_symmetry_truncated(const VerifyConfig& cfg);
CheckResult check_symmetrizer(const VerifyConfig& cfg);
CheckResult check_lower_bound_ingredients(const VerifyConfig& cfg);
CheckResult check_density_limit(const VerifyConfig& cfg);
CheckResult check_constant_series(const VerifyConfig& cfg);

struct CheckEntry {
  std::string name;
  std::string group;  // CLI selector
  std::function<CheckResult(const VerifyConfig&)> run;
};
// Declared order; reports follow it.
const std::vector<CheckEntry>& check_registry();

// Runs a check with its own derived seed, timing, and exception mapping.
CheckResult run_check(const CheckEntry& entry, const VerifyConfig& cfg);

}  // namespace fockcheck
