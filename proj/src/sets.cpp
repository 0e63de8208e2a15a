/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "fockcheck/sets.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace fockcheck {

namespace {
constexpr double kMaxLog = 709.0;
}

PnValue PnEvaluator::operator()(int n, const Coord* k, int count) const {
  if (n < 2) throw std::invalid_argument("p_n is defined for n >= 2");
  if (count != n - 1) throw std::invalid_argument("p_n takes n-1 momenta");
  double s = static_cast<double>(n);
  for (int i = 0; i < count; ++i) s += 2.0 * log_sq_plus_one(k[i]);
  PnValue out;
  out.log_value = s;
  out.overflow = s > kMaxLog;
  out.value = out.overflow ? std::numeric_limits<double>::infinity() : std::exp(s);
  return out;
}

PnValue PnEvaluator::operator()(int n, const std::vector<Coord>& k) const {
  return (*this)(n, k.data(), static_cast<int>(k.size()));
}

PnValue p_n(int n, const std::vector<Coord>& k) { return PnEvaluator{}(n, k); }

PnValue p_prime_n(int n, const std::vector<double>& i) {
  std::vector<Coord> k;
  for (double v : i) k.push_back(Coord::linear({v, 0, 0}));
  return p_n(n, k);
}

namespace {

// Shell test for k[last] against the other coordinates, in given order.
bool shell_test(const Coord* k, int n, const Coord& last, double scale) {
  const PnValue p = PnEvaluator{}(n, k, n - 1);
  if (p.overflow) return false;
  const double L = log_norm(last);
  const double hi = scale * p.value;
  return hi / 2.0 < L && L < hi;
}

}  // namespace

bool in_E_n(const std::vector<Coord>& k, double shell_scale) {
  const int n = static_cast<int>(k.size());
  if (n < 2) throw std::invalid_argument("E_n is defined for n >= 2");
  return shell_test(k.data(), n, k.back(), shell_scale);
}

bool in_F_n(const std::vector<Coord>& k, double shell_scale) {
  const int n = static_cast<int>(k.size());
  if (n <= 1) return false;
  int best = 0;
  double bestL = log_norm(k[0]);
  bool tie = false;
  for (int i = 1; i < n; ++i) {
    const double L = log_norm(k[i]);
    if (L > bestL) {
      best = i;
      bestL = L;
      tie = false;
    } else if (L == bestL) {
      tie = true;
    }
  }
  if (tie) return false;
  std::vector<Coord> rest;
  rest.reserve(n - 1);
  for (int i = 0; i < n; ++i)
    if (i != best) rest.push_back(k[i]);
  if (!shell_test(rest.data(), n, k[best], shell_scale)) return false;
  return !in_F_n(rest);
}

bool in_F_n_bruteforce(const std::vector<Coord>& k) {
  const int n = static_cast<int>(k.size());
  if (n <= 1) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Coord> y;
    for (int i : perm) y.push_back(k[i]);
    if (!in_E_n(y)) continue;
    y.pop_back();
    if (!in_F_n_bruteforce(y)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool in_X(const std::vector<int>& i, const std::vector<Coord>& k) {
  if (i.size() != k.size()) throw std::invalid_argument("annulus index and point differ in length");
  for (std::size_t l = 0; l < i.size(); ++l) {
    const double r = k[l].log_form ? std::exp(k[l].L) : norm(k[l].v);
    if (!(i[l] <= r && r < i[l] + 1.0)) return false;
  }
  return true;
}

bool in_E_prime(int j, const std::vector<Coord>& k) {
  std::vector<Coord> y;
  for (int i = 0; i < static_cast<int>(k.size()); ++i)
    if (i != j - 1) y.push_back(k[i]);
  y.push_back(k[j - 1]);
  return in_E_n(y);
}

bool in_F_max(int j, const std::vector<Coord>& k) { return in_F_n(k) && in_E_prime(j, k); }

int SetPredicate::arity() const {
  switch (kind) {
    case SetKind::X_annulus:
      return static_cast<int>(index.size());
    default:
      return n;
  }
}

bool SetPredicate::contains(const std::vector<Coord>& k) const {
  return negated != contains_plain(k);
}

bool SetPredicate::contains_plain(const std::vector<Coord>& k) const {
  switch (kind) {
    case SetKind::E:
      return in_E_n(k, shell_scale);
    case SetKind::F:
    case SetKind::T:
      return in_F_n(k, shell_scale);
    case SetKind::F_complement:
    case SetKind::T_complement:
      return !in_F_n(k, shell_scale);
    case SetKind::D_ball_product:
      for (const Coord& c : k)
        if (!(log_norm(c) < log_radius)) return false;
      return true;
    case SetKind::X_annulus:
      return in_X(index, k);
    case SetKind::E_prime:
      return in_E_prime(j, k);
    case SetKind::F_max:
      return in_F_max(j, k);
  }
  return false;
}

bool SetPredicate::permutation_invariant() const {
  switch (kind) {
    case SetKind::F:
    case SetKind::F_complement:
    case SetKind::T:
    case SetKind::T_complement:
    case SetKind::D_ball_product:
      return true;
    default:
      return false;
  }
}

std::string SetPredicate::describe() const {
  std::ostringstream os;
  if (negated) os << "not ";
  switch (kind) {
    case SetKind::E: os << "E(" << n << ")"; break;
    case SetKind::F: os << "F(" << n << ")"; break;
    case SetKind::F_complement: os << "Fc(" << n << ")"; break;
    case SetKind::D_ball_product: os << "D(" << n << ",lnR=" << log_radius << ")"; break;
    case SetKind::X_annulus: os << "X(" << index.size() << ")"; break;
    case SetKind::E_prime: os << "Eprime(" << n << "," << j << ")"; break;
    case SetKind::F_max: os << "Fmax(" << n << "," << j << ")"; break;
    case SetKind::T: os << "T(" << n << ")"; break;
    case SetKind::T_complement: os << "Tc(" << n << ")"; break;
  }
  return os.str();
}

FSample sample_F_n(Stream& rng, int n, double base_radius, int max_tries) {
  if (n < 2) throw std::invalid_argument("sample_F_n requires n >= 2");
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<Coord> k;
    double logw = 0.0;
    for (int i = 0; i < n - 1; ++i) {
      const BallDraw b = sample_ball(rng, base_radius);
      k.push_back(Coord::linear(b.k));
      logw += std::log(b.weight);
    }
    if (n - 1 >= 2 && in_F_n(k)) continue;
    const PnValue p = p_n(n, k);
    if (p.overflow) continue;
    const ShellDraw s = sample_log_shell(rng, p.value / 2.0, p.value);
    k.push_back(Coord::radial(s.k));
    if (!in_F_n(k)) continue;
    return {ConfigPoint::make(std::move(k), {}), logw + s.log_weight};
  }
  throw inconclusive_error("sample_F_n rejection budget exhausted");
}

FSample sample_F_n(std::uint64_t seed, int n, double base_radius, int max_tries) {
  Stream rng(seed);
  return sample_F_n(rng, n, base_radius, max_tries);
}

namespace {

// Log-uniform magnitude from below the unit ball to beyond the current maximum.
Coord broad_extra(Stream& rng, const std::vector<Coord>& k) {
  double top = 0.0;
  for (const Coord& c : k) top = std::max(top, log_norm(c));
  return Coord::radial(sample_log_shell(rng, -3.0, 2.0 * top + 5.0).k);
}

}  // namespace

std::int64_t disjointness_witness_scan(std::uint64_t seed, int n, std::int64_t trials,
                                       double shell_scale) {
  if (n < 3) throw std::invalid_argument("disjointness scan requires n >= 3");
  std::int64_t violations = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    Stream rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<Coord> k = sample_F_n(rng, n - 1, 1.0).point.photons;
    // The free coordinate is drawn from several regimes, including the shells
    // that compete with the existing maximum.
    Coord extra;
    switch (rng.below(4)) {
      case 0:
        extra = Coord::linear(sample_ball(rng, 1.0).k);
        break;
      case 1: {
        const PnValue p = p_n(n, k);
        extra = p.overflow ? broad_extra(rng, k) : Coord::radial(sample_log_shell(rng, p.value / 2.0, p.value).k);
        break;
      }
      case 2:
        extra = broad_extra(rng, k);
        break;
      default: {
        std::vector<Coord> head(k.begin(), k.end() - 1);
        const PnValue p = p_n(n - 1, head);
        extra = p.overflow ? broad_extra(rng, k) : Coord::radial(sample_log_shell(rng, p.value / 2.0, p.value).k);
        break;
      }
    }
    k.push_back(extra);
    for (int i = n - 1; i > 0; --i) std::swap(k[i], k[rng.below(i + 1)]);
    if (in_F_n(k, shell_scale)) ++violations;
  }
  return violations;
}

}  // namespace fockcheck
