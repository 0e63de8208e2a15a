/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "fockcheck/operators.hpp"

#include <algorithm>
#include <numeric>

namespace fockcheck {

void CutoffSpec::validate() const {
  if (!(R >= 1.0)) throw std::invalid_argument("cutoff radius must satisfy R >= 1");
  if (!(a >= 1.0)) throw std::invalid_argument("lower cutoff exponent must satisfy a >= 1");
}

namespace {

std::vector<int> iota_slots(int count) {
  std::vector<int> s(count);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

Term prepend(const Factor& f, Term t) {
  t.factors.insert(t.factors.begin(), f);
  return t;
}

// Sector n -> n-1 after photon l no longer appears anywhere.
AffineCoordMap drop_slot(const AffineCoordMap& m, int l) {
  AffineCoordMap r = m;
  if (r.coef[l] != 0) throw std::logic_error("dropping a slot that is still read");
  r.coef.erase(r.coef.begin() + l);
  return r;
}

Factor drop_slot(const Factor& f, int l) {
  Factor r = f;
  switch (f.kind) {
    case FactorKind::Gaussian:
    case FactorKind::RadialPower:
    case FactorKind::BallCutoff:
      r.map = drop_slot(f.map, l);
      break;
    case FactorKind::SetIndicator:
    case FactorKind::PnPower:
      for (int& s : r.slots) {
        if (s == l) throw std::logic_error("dropping a slot that is still read");
        if (s > l) --s;
      }
      break;
  }
  return r;
}

// Closed form of ∫ 1_{E_n} |k_l|^{-3} g dk_l = 2π p_n g when g is free of k_l.
bool closed_shell_term(const Term& t, int l, int n, double weight_exponent, Term& out) {
  int shell = -1, power = -1;
  for (int i = 0; i < static_cast<int>(t.factors.size()); ++i) {
    const Factor& f = t.factors[i];
    if (!f.reads_photon(l, n)) continue;
    if (f.kind == FactorKind::SetIndicator && f.pred.kind == SetKind::E && !f.pred.negated &&
        f.pred.shell_scale == 1.0 && f.slots.back() == l && shell < 0) {
      shell = i;
      continue;
    }
    if (f.kind == FactorKind::RadialPower && power < 0 && f.map.shift == MomentumVector{} &&
        std::count_if(f.map.coef.begin(), f.map.coef.end(), [](int c) { return c != 0; }) == 1 &&
        f.map.coef[l] == 1 && f.param + weight_exponent == -3.0) {
      power = i;
      continue;
    }
    return false;
  }
  if (shell < 0 || power < 0) return false;
  const Factor& e = t.factors[shell];
  const std::vector<int> pn_slots(e.slots.begin(), e.slots.end() - 1);
  const int pn = e.pred.n;
  out.coefficient = t.coefficient;
  out.factors.clear();
  bool cancelled = false;
  for (int i = 0; i < static_cast<int>(t.factors.size()); ++i) {
    if (i == shell || i == power) continue;
    const Factor& f = t.factors[i];
    if (!cancelled && f.kind == FactorKind::PnPower && f.pn_index == pn && f.param == -1.0 &&
        f.slots == pn_slots) {
      cancelled = true;
      continue;
    }
    out.factors.push_back(drop_slot(f, l));
  }
  if (!cancelled) {
    Factor p = Factor::pn_power(pn, 1.0, pn_slots);
    out.factors.push_back(drop_slot(p, l));
  }
  out.coefficient = out.coefficient * Coefficient{{1.0, 0.0}, 1, 1, 1};
  return true;
}

}  // namespace

SectorFunction apply_A_plus_term(const SectorFunction& f, int i) {
  const int n = f.sector + 1;
  if (i < 0 || i >= n) throw std::invalid_argument("creation slot out of range");
  const Substitution sub = Substitution::insertion(f.sector, i);
  const Factor weight = Factor::radial_power(-0.5, AffineCoordMap::photon(n, i));
  const Coefficient c = Coefficient::inv_sqrt(n);
  SectorFunction r;
  r.sector = n;
  for (const Term& t : f.terms) {
    Term s = prepend(weight, t.substitute(sub));
    s.coefficient = c * t.coefficient;
    r.terms.push_back(std::move(s));
  }
  for (const IntegratedTerm& t : f.integrated) {
    IntegratedTerm s = t.substitute(sub);
    s.outer.insert(s.outer.begin(), weight);
    s.coefficient = c * t.coefficient;
    r.integrated.push_back(std::move(s));
  }
  return r;
}

SectorFunction apply_A_plus(const SectorFunction& f) {
  SectorFunction r;
  r.sector = f.sector + 1;
  for (int i = 0; i < r.sector; ++i) r = add(r, apply_A_plus_term(f, i));
  return r;
}

SectorFunction apply_A_minus_term(const SectorFunction& f, int l, const QuadratureSpec& quad,
                                  int shift_sign, bool allow_closed_form) {
  const int n = f.sector;
  if (l < 0 || l >= n) throw std::invalid_argument("annihilation slot out of range");
  if (!f.integrated.empty()) throw std::invalid_argument("nested integrals are not supported");
  quad.validate();
  // Composite maps with the fermion argument shifted by shift_sign·k_l.
  Substitution shifted = Substitution::identity(n);
  shifted.images[n].coef[l] = shift_sign;
  const Coefficient c = Coefficient::inv_sqrt(n);
  SectorFunction r;
  r.sector = n - 1;
  for (const Term& t : f.terms) {
    Term closed;
    if (allow_closed_form && closed_shell_term(t.substitute(shifted), l, n, -0.5, closed)) {
      closed.coefficient = c * closed.coefficient;
      r.terms.push_back(std::move(closed));
      continue;
    }
    IntegratedTerm it;
    it.coefficient = c;
    it.inner = std::make_shared<const Term>(t);
    it.inner_sector = n;
    it.slot = l;
    it.weight_exponent = -0.5;
    it.shift_sign = shift_sign;
    it.quad = quad;
    for (int s = 0; s < n - 1; ++s) it.args.push_back(AffineCoordMap::photon(n - 1, s));
    it.args.push_back(AffineCoordMap::fermion(n - 1));
    r.integrated.push_back(std::move(it));
  }
  return r;
}

SectorFunction apply_A_minus(const SectorFunction& f, const QuadratureSpec& quad) {
  SectorFunction r;
  r.sector = f.sector - 1;
  for (int l = 0; l < f.sector; ++l) r = add(r, apply_A_minus_term(f, l, quad));
  return r;
}

FockState apply_A(const FockState& psi, const QuadratureSpec& quad) {
  FockState out;
  for (const auto& [n, f] : psi.sectors) {
    if (f.empty()) continue;
    SectorFunction up = apply_A_plus(f);
    auto [it, fresh] = out.sectors.try_emplace(n + 1, up);
    if (!fresh) it->second = add(it->second, up);
    if (n == 0) continue;
    SectorFunction down = apply_A_minus(f, quad);
    auto [jt, fresh2] = out.sectors.try_emplace(n - 1, down);
    if (!fresh2) jt->second = add(jt->second, down);
  }
  return out;
}

SectorFunction multiply_indicator(const SectorFunction& f, const Factor& indicator) {
  SectorFunction r = f;
  for (Term& t : r.terms) t.factors.push_back(indicator);
  for (IntegratedTerm& t : r.integrated) t.outer.push_back(indicator);
  return r;
}

namespace {

SectorFunction annulus_cut(SectorFunction f, const CutoffSpec& spec) {
  for (int i = 0; i < f.sector; ++i)
    f = multiply_indicator(f, Factor::ball_cutoff(spec.log_lo(), spec.log_hi(), AffineCoordMap::photon(f.sector, i)));
  return f;
}

}  // namespace

SectorFunction apply_cutoff_A_plus(const SectorFunction& f, const CutoffSpec& spec) {
  spec.validate();
  return annulus_cut(apply_A_plus(f), spec);
}

SectorFunction apply_cutoff_A_minus(const SectorFunction& f, const CutoffSpec& spec,
                                    const QuadratureSpec& quad, int shift_sign) {
  spec.validate();
  const SectorFunction inner = annulus_cut(f, spec);
  SectorFunction r;
  r.sector = f.sector - 1;
  for (int l = 0; l < f.sector; ++l) r = add(r, apply_A_minus_term(inner, l, quad, shift_sign));
  return annulus_cut(r, spec);
}

namespace {

FockState project(const FockState& psi, bool complement) {
  FockState out;
  for (const auto& [n, f] : psi.sectors) {
    if (n <= 1) {
      // F_0 and F_1 are empty.
      if (complement) out.sectors.emplace(n, f);
      else out.sectors.emplace(n, SectorFunction{n, {}, {}});
      continue;
    }
    const SetPredicate p = complement ? SetPredicate::T_complement(n) : SetPredicate::T(n);
    out.sectors.emplace(n, multiply_indicator(f, Factor::indicator(p, iota_slots(n))));
  }
  return out;
}

}  // namespace

FockState project_T(const FockState& psi) { return project(psi, false); }
FockState project_T_complement(const FockState& psi) { return project(psi, true); }

SectorFunction apply_H0(const SectorFunction& f) {
  SectorFunction r;
  r.sector = f.sector;
  for (int s = 0; s <= f.sector; ++s) {
    const AffineCoordMap m = s < f.sector ? AffineCoordMap::photon(f.sector, s) : AffineCoordMap::fermion(f.sector);
    r = add(r, multiply_indicator(f, Factor::radial_power(1.0, m)));
  }
  return r;
}

FockState apply_H0(const FockState& psi) {
  FockState out;
  for (const auto& [n, f] : psi.sectors) out.sectors.emplace(n, apply_H0(f));
  return out;
}

void ChiRecursionSpec::validate() const {
  if (m < 0) throw std::invalid_argument("base sector must be non-negative");
  if (base.sector != m) throw std::invalid_argument("base function sector differs from m");
  if (n_max < m || (n_max - m) % 2 != 0) throw std::invalid_argument("n_max must be m plus an even offset");
  if (!(base_support_radius > 0.0)) throw std::invalid_argument("base support radius must be positive");
  if (chi_term_count(m, n_max) * static_cast<std::int64_t>(std::max<std::size_t>(1, base.size())) > kMaxChiTerms)
    throw std::invalid_argument("chi recursion exceeds the term budget");
  if (d_kind == DomainKind::Ball && m >= 1) {
    // F_{m+1} restricted to the base support lies within radius exp(p_{m+1}(R..R)).
    std::vector<double> radii(m, base_support_radius);
    const PnValue p = p_prime_n(m + 1, radii);
    if (p.overflow || log_R_prime < p.value)
      throw std::invalid_argument("ball D_{m+1} does not contain F_{m+1} on the base support");
  }
}

std::int64_t chi_term_count(int m, int n) {
  std::int64_t c = 1;
  for (int k = n - 1; k >= m + 1; k -= 2) {
    c *= k;
    if (c > kMaxChiTerms * 1000) return c;
  }
  return c;
}

Factor chi_domain_indicator(const ChiRecursionSpec& spec, bool complement) {
  const int count = spec.m + 1;
  SetPredicate p = spec.d_kind == DomainKind::Ball ? SetPredicate::D_ball(count, spec.log_R_prime)
                                                   : SetPredicate::F(count);
  if (complement) p = p.complement();
  return Factor::indicator(p, iota_slots(count));
}

ChiSequence build_chi_sequence(const ChiRecursionSpec& spec) {
  spec.validate();
  ChiSequence out;
  out.state.sectors.emplace(spec.m, spec.base);
  for (int n = spec.m + 2; n <= spec.n_max; n += 2) {
    const SectorFunction& prev = out.state.sectors.at(n - 2);
    // −√n / (2π) · 1_{E_n} 1_{D^c} (1/p_n) |k_n|^{-5/2} · (Â⁺χ_{n-2})(k_1..k_{n-1}; p + k_n)
    const Coefficient pre{{-1.0, 0.0}, -1, n, 1};
    std::vector<Factor> head;
    head.push_back(Factor::indicator(SetPredicate::E(n), iota_slots(n)));
    if (n == spec.m + 2) head.push_back(chi_domain_indicator(spec, true));
    if (!spec.mutate_undamped) head.push_back(Factor::pn_power(n, -1.0, iota_slots(n - 1)));
    head.push_back(Factor::radial_power(spec.mutate_undamped ? -1.5 : -2.5, AffineCoordMap::photon(n, n - 1)));
    const Substitution lift = Substitution::insertion(n - 1, n - 1);
    SectorFunction chi;
    chi.sector = n;
    std::vector<SectorFunction> split;
    for (int j = 0; j < n - 1; ++j) {
      const SectorFunction created = apply_A_plus_term(prev, j);
      SectorFunction part;
      part.sector = n;
      for (const Term& t : created.terms) {
        Term s = t.substitute(lift);
        s.factors.insert(s.factors.begin(), head.begin(), head.end());
        s.coefficient = t.coefficient * pre;
        part.terms.push_back(std::move(s));
      }
      chi = add(chi, part);
      split.push_back(std::move(part));
    }
    out.state.sectors.emplace(n, std::move(chi));
    out.split.emplace(n, std::move(split));
  }
  return out;
}

}  // namespace fockcheck
