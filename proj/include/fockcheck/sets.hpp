/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fockcheck/geometry.hpp"

namespace fockcheck {

struct PnValue {
  double log_value = 0;  // ln p_n, always finite
  double value = 0;      // p_n, +inf when overflow
  bool overflow = false;
};

// p_n(k_1..k_{n-1}) = e^n ∏ (k_i² + 1)².
struct PnEvaluator {
  PnValue operator()(int n, const std::vector<Coord>& k) const;
  PnValue operator()(int n, const Coord* k, int count) const;
};

PnValue p_n(int n, const std::vector<Coord>& k);
// p'_n(i_1..i_{n-1}) = p_n(i_1 ê₁, ..., i_{n-1} ê₁).
PnValue p_prime_n(int n, const std::vector<double>& i);

// The shell (p_n/2, p_n) on ln|k_n|. shell_scale multiplies both edges and
// only deviates from 1 in mutation controls.
bool in_E_n(const std::vector<Coord>& k, double shell_scale = 1.0);
bool in_F_n(const std::vector<Coord>& k, double shell_scale = 1.0);
// Enumerates all n! orderings of the recursive definition; test oracle only.
bool in_F_n_bruteforce(const std::vector<Coord>& k);
// i_l ≤ |k_l| < i_l + 1 for every l.
bool in_X(const std::vector<int>& i, const std::vector<Coord>& k);
// (k_1..k̂_j..k_N, k_j) ∈ E_N, with 1-based j.
bool in_E_prime(int j, const std::vector<Coord>& k);
bool in_F_max(int j, const std::vector<Coord>& k);

enum class SetKind { E, F, F_complement, D_ball_product, X_annulus, E_prime, F_max, T, T_complement };

struct SetPredicate {
  SetKind kind = SetKind::E;
  int n = 0;                 // sector for E/F/T; N for E_prime/F_max; count for D
  int j = 0;                 // 1-based maximal slot for E_prime/F_max
  double log_radius = 0;     // ln R' for D_ball_product
  std::vector<int> index;    // annulus indices for X_annulus
  double shell_scale = 1.0;  // mutation knob for E/F
  bool negated = false;      // complement of the described set

  static SetPredicate make(SetKind kind, int n, int j = 0) {
    SetPredicate s;
    s.kind = kind;
    s.n = n;
    s.j = j;
    return s;
  }
  static SetPredicate E(int n) { return make(SetKind::E, n); }
  static SetPredicate F(int n) { return make(SetKind::F, n); }
  static SetPredicate F_complement(int n) { return make(SetKind::F_complement, n); }
  static SetPredicate D_ball(int count, double log_radius) {
    SetPredicate s = make(SetKind::D_ball_product, count);
    s.log_radius = log_radius;
    return s;
  }
  static SetPredicate X(std::vector<int> i) {
    SetPredicate s = make(SetKind::X_annulus, static_cast<int>(i.size()));
    s.index = std::move(i);
    return s;
  }
  static SetPredicate E_prime(int N, int j) { return make(SetKind::E_prime, N, j); }
  static SetPredicate F_max(int N, int j) { return make(SetKind::F_max, N, j); }
  static SetPredicate T(int n) { return make(SetKind::T, n); }
  static SetPredicate T_complement(int n) { return make(SetKind::T_complement, n); }

  SetPredicate complement() const {
    SetPredicate s = *this;
    s.negated = !negated;
    return s;
  }

  // Number of photon coordinates the predicate reads.
  int arity() const;
  bool contains(const std::vector<Coord>& k) const;
  bool contains_plain(const std::vector<Coord>& k) const;
  // True when the indicator is invariant under permutations of its arguments.
  bool permutation_invariant() const;
  std::string describe() const;
  bool operator==(const SetPredicate&) const = default;
};

struct FSample {
  ConfigPoint point;
  double log_weight;
};

class inconclusive_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// k_1..k_{n-1} uniform in a ball of base_radius (rejected while in F_{n-1}),
// then k_n log-uniform in the E_n shell. The fermion momentum is zero.
FSample sample_F_n(Stream& rng, int n, double base_radius, int max_tries = 1000);
FSample sample_F_n(std::uint64_t seed, int n, double base_radius, int max_tries = 1000);

// Draws points of F_{n-1} × ℝ³ and counts those accepted by in_F_n.
std::int64_t disjointness_witness_scan(std::uint64_t seed, int n, std::int64_t trials,
                                       double shell_scale = 1.0);

}  // namespace fockcheck
