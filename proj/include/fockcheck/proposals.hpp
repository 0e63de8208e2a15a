/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <memory>
#include <vector>

#include "fockcheck/geometry.hpp"
#include "fockcheck/rng.hpp"

namespace fockcheck {

// A sampling density on ℝ^{3n+3} (n photons, then the fermion).
class Proposal {
 public:
  virtual ~Proposal() = default;
  virtual int sector() const = 0;
  virtual ConfigPoint sample(Stream& rng) const = 0;
  // Log of the Lebesgue density; -inf outside the support.
  virtual double log_density(const ConfigPoint& x) const = 0;
};

using ProposalPtr = std::shared_ptr<const Proposal>;

// Independent isotropic Gaussians of width sigma on every coordinate.
ProposalPtr gaussian_proposal(int sector, double sigma);

// Σ w_i q_i with normalized weights.
ProposalPtr mixture(std::vector<ProposalPtr> parts, std::vector<double> weights = {});

// How the low-momentum photon of a recursion step is drawn.
struct SmallPhoton {
  enum class Kind { Rayleigh, Exterior, Gaussian };
  Kind kind = Kind::Rayleigh;
  double sigma = 1.0;        // Gaussian
  double log_radius = 0.0;   // Exterior: draws |k| > e^log_radius
  double broad_weight = 0.1; // share of a unit Gaussian kept for tail coverage
};

// One step of the χ recursion read as a sampler:
//   y ~ inner;  photons of y fill the slots other than small_slot and the last;
//   k_small from `small` relative to P = e^{shell_n} ∏ over the filled slots (k²+1)²;
//   k_last from |k|^shell_power on (P'/2, P') in ln|k|, or (P'/2, ∞) when unbounded,
//   with P' = P·(k_small² + 1)²;
//   p = q - k_small - k_last.
// small_slot = -1 places no small photon.
struct ChiStep {
  ProposalPtr inner;
  int small_slot = -1;
  int shell_n = 2;           // index n of the p_n that sets the shell
  double shell_power = -5.0;
  bool unbounded = false;
  SmallPhoton small;
  // Leave k_last at the origin and out of the density, for targets whose
  // shell photon is integrated in closed form.
  bool integrate_last = false;
};
ProposalPtr chi_step_proposal(ChiStep step);

}  // namespace fockcheck
