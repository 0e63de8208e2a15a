/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "fockcheck/states.hpp"

#include <algorithm>
#include <numeric>

namespace fockcheck {

namespace {

const double kLogTwoPi = std::log(kTwoPi);

std::int64_t checked_product(std::int64_t a, std::int64_t b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > static_cast<__int128>(INT64_MAX)) throw std::overflow_error("coefficient radicand overflow");
  return static_cast<std::int64_t>(p);
}

}  // namespace

Coefficient Coefficient::operator*(const Coefficient& o) const {
  std::int64_t a = sqrt_num, b = o.sqrt_num, c = sqrt_den, d = o.sqrt_den;
  // Cross-reduce before multiplying to keep the radicand small.
  std::int64_t g = std::gcd(a, d);
  a /= g, d /= g;
  g = std::gcd(b, c);
  b /= g, c /= g;
  Coefficient r;
  r.base = base * o.base;
  r.two_pi_power = two_pi_power + o.two_pi_power;
  r.sqrt_num = checked_product(a, b);
  r.sqrt_den = checked_product(c, d);
  g = std::gcd(r.sqrt_num, r.sqrt_den);
  r.sqrt_num /= g;
  r.sqrt_den /= g;
  return r;
}

LogValue Coefficient::log_value() const {
  const double s = two_pi_power * kLogTwoPi +
                   0.5 * (std::log(static_cast<double>(sqrt_num)) - std::log(static_cast<double>(sqrt_den)));
  return LogValue::from(base) * LogValue::exp_of(s);
}

Substitution Substitution::insertion(int old_sector, int slot) {
  Substitution s;
  s.new_sector = old_sector + 1;
  for (int i = 0; i < old_sector; ++i)
    s.images.push_back(AffineCoordMap::photon(s.new_sector, i < slot ? i : i + 1));
  AffineCoordMap f = AffineCoordMap::fermion(s.new_sector);
  f.coef[slot] = 1;
  s.images.push_back(f);
  return s;
}

Substitution Substitution::permutation(const std::vector<int>& perm) {
  Substitution s;
  s.new_sector = static_cast<int>(perm.size());
  for (int p : perm) s.images.push_back(AffineCoordMap::photon(s.new_sector, p));
  s.images.push_back(AffineCoordMap::fermion(s.new_sector));
  return s;
}

Substitution Substitution::identity(int sector) {
  std::vector<int> perm(sector);
  std::iota(perm.begin(), perm.end(), 0);
  return permutation(perm);
}

AffineCoordMap substitute(const AffineCoordMap& m, const Substitution& s) {
  AffineCoordMap r;
  r.coef.assign(s.new_sector + 1, 0);
  r.shift = m.shift;
  for (std::size_t i = 0; i < m.coef.size(); ++i) {
    const int c = m.coef[i];
    if (c == 0) continue;
    const AffineCoordMap& img = s.images[i];
    for (int j = 0; j <= s.new_sector; ++j) r.coef[j] += c * img.coef[j];
    r.shift = r.shift + img.shift * static_cast<double>(c);
  }
  return r;
}

namespace {

int pure_photon_slot(const AffineCoordMap& m) {
  int slot = -1;
  for (int j = 0; j < static_cast<int>(m.coef.size()); ++j) {
    if (m.coef[j] == 0) continue;
    if (m.coef[j] != 1 || slot >= 0 || j == m.sector()) return -1;
    slot = j;
  }
  if (!(m.shift == MomentumVector{})) return -1;
  return slot;
}

std::vector<Coord> gather(const std::vector<int>& slots, const ConfigPoint& x) {
  std::vector<Coord> k;
  k.reserve(slots.size());
  for (int s : slots) k.push_back(x.photons[s]);
  return k;
}

}  // namespace

Factor Factor::gaussian(double sigma, AffineCoordMap m) {
  if (!(sigma > 0.0)) throw std::invalid_argument("Gaussian width must be positive");
  Factor f;
  f.kind = FactorKind::Gaussian;
  f.param = sigma;
  f.map = std::move(m);
  return f;
}

Factor Factor::radial_power(double a, AffineCoordMap m) {
  Factor f;
  f.kind = FactorKind::RadialPower;
  f.param = a;
  f.map = std::move(m);
  return f;
}

Factor Factor::indicator(SetPredicate p, std::vector<int> slots) {
  Factor f;
  f.kind = FactorKind::SetIndicator;
  f.pred = std::move(p);
  f.slots = std::move(slots);
  return f;
}

Factor Factor::ball_cutoff(double log_lo, double log_hi, AffineCoordMap m) {
  Factor f;
  f.kind = FactorKind::BallCutoff;
  f.log_lo = log_lo;
  f.log_hi = log_hi;
  f.map = std::move(m);
  return f;
}

Factor Factor::pn_power(int n, double exponent, std::vector<int> slots) {
  Factor f;
  f.kind = FactorKind::PnPower;
  f.pn_index = n;
  f.param = exponent;
  f.slots = std::move(slots);
  return f;
}

LogValue Factor::evaluate(const ConfigPoint& x) const {
  switch (kind) {
    case FactorKind::Gaussian: {
      const Coord c = apply_map(map, x);
      const double q = c.log_form ? std::exp(2.0 * c.L) : norm_sq(c.v);
      return LogValue::exp_of(-q / (2.0 * param * param));
    }
    case FactorKind::RadialPower: {
      const double L = log_norm(apply_map(map, x));
      if (L == -std::numeric_limits<double>::infinity()) {
        if (param < 0.0) return {std::numeric_limits<double>::infinity(), {1.0, 0.0}};
        return param == 0.0 ? LogValue::one() : LogValue::zero();
      }
      return LogValue::exp_of(param * L);
    }
    case FactorKind::SetIndicator:
      return pred.contains(gather(slots, x)) ? LogValue::one() : LogValue::zero();
    case FactorKind::BallCutoff: {
      const double L = log_norm(apply_map(map, x));
      return (L >= log_lo && L < log_hi) ? LogValue::one() : LogValue::zero();
    }
    case FactorKind::PnPower: {
      const std::vector<Coord> k = gather(slots, x);
      return LogValue::exp_of(param * PnEvaluator{}(pn_index, k).log_value);
    }
  }
  return LogValue::zero();
}

Factor Factor::substitute(const Substitution& s) const {
  Factor f = *this;
  switch (kind) {
    case FactorKind::Gaussian:
    case FactorKind::RadialPower:
    case FactorKind::BallCutoff:
      f.map = fockcheck::substitute(map, s);
      break;
    case FactorKind::SetIndicator:
    case FactorKind::PnPower:
      for (int& slot : f.slots) {
        slot = pure_photon_slot(s.images[slot]);
        if (slot < 0) throw std::logic_error("set arguments must map to photon slots");
      }
      break;
  }
  return f;
}

bool Factor::reads_photon(int slot, int) const {
  switch (kind) {
    case FactorKind::Gaussian:
    case FactorKind::RadialPower:
    case FactorKind::BallCutoff:
      return map.coef[slot] != 0;
    case FactorKind::SetIndicator:
    case FactorKind::PnPower:
      return std::find(slots.begin(), slots.end(), slot) != slots.end();
  }
  return false;
}

LogValue Term::evaluate(const ConfigPoint& x) const {
  LogValue v = coefficient.log_value();
  for (const Factor& f : factors) {
    if (v.is_zero()) return v;
    v *= f.evaluate(x);
  }
  return v;
}

Term Term::substitute(const Substitution& s) const {
  Term t;
  t.coefficient = coefficient;
  for (const Factor& f : factors) t.factors.push_back(f.substitute(s));
  return t;
}

std::size_t SectorFunction::size() const { return terms.size() + integrated.size(); }

SectorFunction SectorFunction::scaled(const Coefficient& c) const {
  SectorFunction r = *this;
  for (Term& t : r.terms) t.coefficient = c * t.coefficient;
  for (IntegratedTerm& t : r.integrated) t.coefficient = c * t.coefficient;
  return r;
}

ConfigPoint remap_point(const std::vector<AffineCoordMap>& args, const ConfigPoint& x) {
  const int ny = static_cast<int>(args.size()) - 1;
  ConfigPoint y;
  std::vector<int> source(ny, -1);
  for (int s = 0; s < ny; ++s) {
    const int slot = pure_photon_slot(args[s]);
    if (slot >= 0) {
      y.photons.push_back(x.photons[slot]);
      source[s] = slot;
    } else {
      y.photons.push_back(apply_map(args[s], x));
    }
  }
  const AffineCoordMap& a = args[ny];
  const int nx = x.sector();
  const int cf = a.coef[nx];
  y.fermion_base = a.shift + x.fermion_base * static_cast<double>(cf);
  y.fermion_coef.assign(ny, 0);
  for (int i = 0; i < nx; ++i) {
    const int c = a.coef[i] + cf * x.fermion_coef[i];
    if (c == 0) continue;
    const auto it = std::find(source.begin(), source.end(), i);
    if (it != source.end())
      y.fermion_coef[it - source.begin()] += c;
    else
      y.fermion_extra.emplace_back(c, x.photons[i]);
  }
  if (cf != 0)
    for (const auto& [c, k] : x.fermion_extra) y.fermion_extra.emplace_back(cf * c, k);
  return y;
}

namespace {

struct RadialDomain {
  double u_lo = -std::numeric_limits<double>::infinity();
  double u_hi = std::numeric_limits<double>::infinity();

  void intersect(double lo, double hi) {
    u_lo = std::max(u_lo, lo);
    u_hi = std::min(u_hi, hi);
  }
};

// Radial constraints on the integration variable implied by indicator factors.
RadialDomain radial_domain(const Term& t, int slot, const ConfigPoint& inner) {
  RadialDomain d;
  for (const Factor& f : t.factors) {
    if (f.kind == FactorKind::BallCutoff && pure_photon_slot(f.map) == slot) {
      d.intersect(f.log_lo, f.log_hi);
    } else if (f.kind == FactorKind::SetIndicator && f.pred.kind == SetKind::X_annulus && !f.pred.negated) {
      for (std::size_t q = 0; q < f.slots.size(); ++q)
        if (f.slots[q] == slot) {
          const int i = f.pred.index[q];
          d.intersect(i == 0 ? -std::numeric_limits<double>::infinity() : std::log(i), std::log(i + 1.0));
        }
    } else if (f.kind == FactorKind::SetIndicator && f.pred.kind == SetKind::E && !f.pred.negated) {
      const int n = f.pred.n;
      const double scale = f.pred.shell_scale;
      const std::vector<Coord> k = gather(f.slots, inner);
      if (f.slots.back() == slot) {
        const PnValue p = PnEvaluator{}(n, k.data(), n - 1);
        if (p.overflow) {
          d.intersect(1.0, 0.0);
          continue;
        }
        d.intersect(scale * p.value / 2.0, scale * p.value);
        continue;
      }
      const auto pos = std::find(f.slots.begin(), f.slots.end() - 1, slot);
      if (pos == f.slots.end() - 1) continue;
      // L < scale·P(r²+1)² < 2L with P the p_n factor of the other arguments.
      double logP = n;
      for (int q = 0; q < n - 1; ++q)
        if (f.slots[q] != slot) logP += 2.0 * log_sq_plus_one(k[q]);
      logP += std::log(scale);
      const double L = log_norm(k.back());
      if (!(L > 0.0)) {
        d.intersect(1.0, 0.0);
        continue;
      }
      const double a_lo = 0.5 * (std::log(L) - logP);
      const double a_hi = 0.5 * (std::log(2.0 * L) - logP);
      if (a_hi <= 0.0) {
        d.intersect(1.0, 0.0);
        continue;
      }
      const double lo = a_lo <= 0.0 ? -std::numeric_limits<double>::infinity() : 0.5 * std::log(std::expm1(a_lo));
      d.intersect(lo, 0.5 * std::log(std::expm1(a_hi)));
    }
  }
  return d;
}

ConfigPoint insert_variable(const ConfigPoint& y, int slot, const Coord& k, int shift_sign) {
  ConfigPoint z;
  z.photons = y.photons;
  z.photons.insert(z.photons.begin() + slot, k);
  z.fermion_base = y.fermion_base;
  z.fermion_coef = y.fermion_coef;
  z.fermion_coef.insert(z.fermion_coef.begin() + slot, shift_sign);
  z.fermion_extra = y.fermion_extra;
  return z;
}

}  // namespace

LogValue IntegratedTerm::evaluate(const ConfigPoint& x) const {
  LogValue pre = coefficient.log_value();
  for (const Factor& f : outer) {
    if (pre.is_zero()) return pre;
    pre *= f.evaluate(x);
  }
  if (pre.is_zero()) return pre;
  const ConfigPoint y = remap_point(args, x);
  // Domain constraints only read the other arguments, so a dummy value suffices.
  const ConfigPoint probe = insert_variable(y, slot, Coord::linear({1, 0, 0}), shift_sign);
  RadialDomain d = radial_domain(*inner, slot, probe);
  if (d.u_hi == std::numeric_limits<double>::infinity()) d.u_hi = std::log(quad.truncation_radius);
  if (!(d.u_lo < d.u_hi)) return LogValue::zero();

  const SphereRule sph = sphere_rule(quad.angular_order);
  const bool from_origin = d.u_lo == -std::numeric_limits<double>::infinity();
  LogValue total = LogValue::zero();
  for (int panel = 0; panel < quad.radial_panels; ++panel) {
    Rule rule;
    if (from_origin) {
      // r = R s² keeps r^{2+w} dr smooth in s for half-integer w.
      rule = gauss_legendre(quad.radial_order, static_cast<double>(panel) / quad.radial_panels,
                            static_cast<double>(panel + 1) / quad.radial_panels);
    } else {
      const double w = (d.u_hi - d.u_lo) / quad.radial_panels;
      rule = gauss_legendre(quad.radial_order, d.u_lo + w * panel, d.u_lo + w * (panel + 1));
    }
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      // u = ln r; the measure r² dr becomes e^{3u} du in the log variable
      // and 2 R s r² ds from the origin.
      const double u = from_origin ? d.u_hi + 2.0 * std::log(rule.x[i]) : rule.x[i];
      const double log_jac = from_origin ? std::log(2.0 * rule.x[i]) + d.u_hi + 2.0 * u : 3.0 * u;
      const LogValue radial = LogValue::exp_of(std::log(rule.w[i]) + log_jac + weight_exponent * u);
      for (std::size_t a = 0; a < sph.w.size(); ++a) {
        const MomentumVector dir{sph.x[a], sph.y[a], sph.z[a]};
        const Coord k = from_origin ? Coord::linear(dir * std::exp(u)) : Coord::radial(dir, u);
        const ConfigPoint z = insert_variable(y, slot, k, shift_sign);
        const LogValue v = inner->evaluate(z);
        if (v.is_zero()) continue;
        total += v * radial * LogValue::exp_of(std::log(sph.w[a]));
      }
    }
  }
  return pre * total;
}

IntegratedTerm IntegratedTerm::substitute(const Substitution& s) const {
  IntegratedTerm t = *this;
  t.outer.clear();
  for (const Factor& f : outer) t.outer.push_back(f.substitute(s));
  for (AffineCoordMap& a : t.args) a = fockcheck::substitute(a, s);
  return t;
}

LogValue evaluate_log(const SectorFunction& f, const ConfigPoint& x) {
  if (x.sector() != f.sector) throw std::invalid_argument("point sector does not match function");
  LogValue v = LogValue::zero();
  for (const Term& t : f.terms) v += t.evaluate(x);
  for (const IntegratedTerm& t : f.integrated) v += t.evaluate(x);
  return v;
}

std::complex<double> evaluate(const SectorFunction& f, const ConfigPoint& x) {
  const LogValue v = evaluate_log(f, x);
  if (!v.is_finite()) return {std::numeric_limits<double>::infinity(), 0.0};
  return v.value();
}

SectorFunction add(const SectorFunction& a, const SectorFunction& b) {
  if (a.sector != b.sector) throw std::invalid_argument("cannot add functions of different sectors");
  SectorFunction r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  r.integrated.insert(r.integrated.end(), b.integrated.begin(), b.integrated.end());
  return r;
}

SectorFunction substitute(const SectorFunction& f, const Substitution& s) {
  SectorFunction r;
  r.sector = s.new_sector;
  for (const Term& t : f.terms) r.terms.push_back(t.substitute(s));
  for (const IntegratedTerm& t : f.integrated) r.integrated.push_back(t.substitute(s));
  return r;
}

SectorFunction symmetrize(const SectorFunction& f, bool normalized) {
  const int n = f.sector;
  if (n > 6) throw capability_error("symmetrize is limited to six photons");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 1;
  for (int i = 2; i <= n; ++i) count *= i;
  const Coefficient norm = normalized ? Coefficient::inv_sqrt(count * count) : Coefficient{};
  SectorFunction r;
  r.sector = n;
  do {
    r = add(r, substitute(f, Substitution::permutation(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r.scaled(norm);
}

SectorFunction make_base_chi(int m, double support_radius, double sigma) {
  if (m < 0) throw std::invalid_argument("sector must be non-negative");
  if (!(support_radius > 0.0) || !(sigma > 0.0)) throw std::invalid_argument("R and σ must be positive");
  Term t;
  const double lnR = std::log(support_radius);
  const double ninf = -std::numeric_limits<double>::infinity();
  for (int s = 0; s <= m; ++s) {
    const AffineCoordMap map = s < m ? AffineCoordMap::photon(m, s) : AffineCoordMap::fermion(m);
    t.factors.push_back(Factor::gaussian(sigma, map));
    t.factors.push_back(Factor::ball_cutoff(ninf, lnR, map));
  }
  SectorFunction f;
  f.sector = m;
  f.terms.push_back(std::move(t));
  return f;
}

const SectorFunction* FockState::find(int n) const {
  const auto it = sectors.find(n);
  return it == sectors.end() ? nullptr : &it->second;
}

std::vector<int> FockState::support() const {
  std::vector<int> s;
  for (const auto& [n, f] : sectors)
    if (!f.empty()) s.push_back(n);
  return s;
}

}  // namespace fockcheck
