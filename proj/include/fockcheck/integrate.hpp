/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fockcheck/proposals.hpp"
#include "fockcheck/states.hpp"

namespace fockcheck {

// value = mean · e^{log_scale}; std_error is in the same units as mean.
struct MCEstimate {
  std::complex<double> mean{};
  double std_error = 0;
  std::int64_t n_samples = 0;
  double log_scale = 0;

  bool log_scaled() const { return log_scale != 0.0; }
  std::complex<double> value() const { return mean * std::exp(log_scale); }
  double error() const { return std_error * std::exp(log_scale); }
  // ln|mean| + log_scale; -inf for an exact zero.
  double log_abs() const;
  // ln(std_error) + log_scale.
  double log_error() const;
};

// Exact sum of independent estimates; errors add in quadrature.
MCEstimate combine(const std::vector<MCEstimate>& parts);

struct MCOptions {
  std::int64_t n_samples = 100000;
  int threads = 1;
};

// Importance-sampled ∫ conj(f) g with a shared sample set, so that
// mc_inner(f, g) and mc_inner(g, f) are exact conjugates.
MCEstimate mc_inner(const SectorFunction& f, const SectorFunction& g, const Proposal& q,
                    std::uint64_t seed, const MCOptions& opt);
MCEstimate mc_norm_sq(const SectorFunction& f, const Proposal& q, std::uint64_t seed, const MCOptions& opt);
// ∫ |f|² e^{log_weight}; the weight is evaluated only where f is nonzero.
MCEstimate mc_weighted_norm_sq(const SectorFunction& f, const std::function<double(const ConfigPoint&)>& log_weight,
                               const Proposal& q, std::uint64_t seed, const MCOptions& opt);
// Σ_n ‖ψ_n‖² with one proposal per populated sector.
MCEstimate fock_norm_sq(const FockState& psi, const std::map<int, ProposalPtr>& proposals,
                        std::uint64_t seed, const MCOptions& opt);

// ∫ 1_{e^{p/2} < |k| < e^p} |k|^{-3} dk = 2π p.
double closed_shell_integral(double p);

struct ReferenceIntegral {
  std::string name;
  double stated;     // closed form or bound
  double computed;   // adaptive quadrature
  double abs_error;  // quadrature error estimate
  bool converged;
  bool is_bound;     // stated is an upper bound rather than the value
};
std::vector<ReferenceIntegral> reference_radial_integrals(double rel_tol = 1e-12);

// Radial quadrature of ∫ 1_{shell} |k|^{-3} dk in the log variable.
AdaptiveResult shell_integral_quadrature(double p, double rel_tol = 1e-12);

}  // namespace fockcheck
