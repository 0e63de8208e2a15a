/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fockcheck/states.hpp"

namespace fockcheck {

// Momentum annulus B_R \ B_{R^{-a}} applied per photon.
struct CutoffSpec {
  double R = 1.0;
  double a = 1.0;

  void validate() const;
  double log_lo() const { return -a * std::log(R); }
  double log_hi() const { return std::log(R); }
};

// (1/√n) Σ_i |k_i|^{-1/2} f(k̂_i; p + k_i), n = f.sector + 1.
SectorFunction apply_A_plus(const SectorFunction& f);
// The single summand i (0-based) of apply_A_plus, including 1/√n.
SectorFunction apply_A_plus_term(const SectorFunction& f, int i);

// (1/√n) ∫ |k_l|^{-1/2} f(k; p + shift_sign·k_l) dk_l for 0-based l.
// Terms of the form 1_{E_n} |k_l|^{-5/2} g with g free of k_l use the closed
// shell integral 2π p_n and cancel a matching 1/p_n factor; all others become
// quadrature terms. shift_sign is -1 except in mutation controls.
SectorFunction apply_A_minus_term(const SectorFunction& f, int l, const QuadratureSpec& quad,
                                  int shift_sign = -1, bool allow_closed_form = true);
SectorFunction apply_A_minus(const SectorFunction& f, const QuadratureSpec& quad);

// Sector n of the result is Â⁺ψ_{n-1} + Â⁻ψ_{n+1}.
FockState apply_A(const FockState& psi, const QuadratureSpec& quad);

SectorFunction apply_cutoff_A_plus(const SectorFunction& f, const CutoffSpec& spec);
SectorFunction apply_cutoff_A_minus(const SectorFunction& f, const CutoffSpec& spec,
                                    const QuadratureSpec& quad, int shift_sign = -1);

// Multiplies every term by the indicator; integrated terms get it as an outer factor.
SectorFunction multiply_indicator(const SectorFunction& f, const Factor& indicator);

FockState project_T(const FockState& psi);
FockState project_T_complement(const FockState& psi);

// Multiplication by Σ|k_i| + |p|.
FockState apply_H0(const FockState& psi);
SectorFunction apply_H0(const SectorFunction& f);

enum class DomainKind { Ball, F };

struct ChiRecursionSpec {
  int m = 0;
  SectorFunction base;             // χ_m
  double base_support_radius = 1;  // R of the base cutoff
  DomainKind d_kind = DomainKind::F;
  double log_R_prime = 0;          // ln R' for the ball variant
  int n_max = 0;
  bool mutate_undamped = false;    // drops 1/p_n and weakens |k_n|^{-5/2} to |k_n|^{-3/2}

  void validate() const;
};

struct ChiSequence {
  FockState state;
  // split[n][j] is the summand χ_{n,j+1} carrying |k_{j+1}|^{-1/2}.
  std::map<int, std::vector<SectorFunction>> split;
};

constexpr std::int64_t kMaxChiTerms = 100000;

// (n-1)(n-3)⋯(m+1).
std::int64_t chi_term_count(int m, int n);

ChiSequence build_chi_sequence(const ChiRecursionSpec& spec);

// The D_{n-1} membership used by the sector-n recursion step.
Factor chi_domain_indicator(const ChiRecursionSpec& spec, bool complement);

}  // namespace fockcheck
