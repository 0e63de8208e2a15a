/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "fockcheck/verify.hpp"

#include <chrono>
#include <limits>
#include <numeric>
#include <sstream>

namespace fockcheck {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

MCOptions mc(const VerifyConfig& cfg, std::int64_t n) { return {n, cfg.threads}; }

// Relative comparison of a computed value against a closed form.
CheckItem rel_item(std::string label, double observed, double expected, double tol) {
  CheckItem it{std::move(label), Status::Pass, observed, expected, 0.0, "rel " + fmt(tol)};
  const double rel = std::abs(observed - expected) / std::max(std::abs(expected), 1e-300);
  if (!(rel <= tol)) it.status = Status::Fail;
  return it;
}

// lhs ≤ factor·base within k combined standard errors, evaluated on a common log scale.
CheckItem bound_item(std::string label, const MCEstimate& lhs, double factor, const MCEstimate& base, double k = 3.0) {
  CheckItem it{std::move(label), Status::Pass, 0.0, factor, 0.0, "ratio <= bound + 3 SE"};
  const double lf = std::log(factor);
  const double L = std::max({lhs.log_abs(), lhs.log_error(), lf + base.log_abs(), lf + base.log_error()});
  if (L == kNegInf) return it;
  const double a = lhs.mean.real() * std::exp(lhs.log_scale - L);
  const double sa = lhs.std_error * std::exp(lhs.log_scale - L);
  const double b = factor * base.mean.real() * std::exp(base.log_scale - L);
  const double sb = factor * base.std_error * std::exp(base.log_scale - L);
  const double sigma = std::hypot(sa, sb);
  if (b > 0.0) {
    it.observed = factor * a / b;
    it.std_error = factor * sigma / b;
  } else {
    it.observed = std::numeric_limits<double>::infinity();
  }
  if (!(a <= b + k * sigma)) it.status = Status::Fail;
  return it;
}

// |a - b| within k combined standard errors.
CheckItem equal_item(std::string label, const MCEstimate& a, const MCEstimate& b, double k = 3.0) {
  CheckItem it{std::move(label), Status::Pass, 0.0, 0.0, 0.0, "|lhs - rhs| <= 3 combined SE"};
  const double L = std::max({a.log_abs(), a.log_error(), b.log_abs(), b.log_error()});
  if (L == kNegInf) return it;
  const std::complex<double> x = a.mean * std::exp(a.log_scale - L);
  const std::complex<double> y = b.mean * std::exp(b.log_scale - L);
  const double sigma = std::hypot(a.std_error * std::exp(a.log_scale - L), b.std_error * std::exp(b.log_scale - L));
  const double scale = std::exp(L);
  it.observed = std::abs(x - y) * scale;
  it.expected = 0.0;
  it.std_error = sigma * scale;
  if (!(std::abs(x - y) <= k * sigma)) it.status = Status::Fail;
  return it;
}

// A control must fail; a pass means the check has no power.
CheckItem control_item(std::string label, CheckItem mutated) {
  mutated.label = std::move(label);
  mutated.rule = "mutation control: must violate (" + mutated.rule + ")";
  mutated.status = mutated.status == Status::Fail ? Status::Pass : Status::Inconclusive;
  return mutated;
}

// For controls whose mutated norm is infinite: the SE is unbounded, so the
// point estimate must exceed the bound.
CheckItem control_exceeds(std::string label, CheckItem mutated) {
  mutated.label = std::move(label);
  mutated.rule = "mutation control: point estimate > bound";
  mutated.status = mutated.observed > mutated.expected ? Status::Pass : Status::Inconclusive;
  return mutated;
}

ChiRecursionSpec chi_spec(const VerifyConfig& cfg, int m, int n_max, DomainKind d, double log_Rp = 0.0,
                          bool undamped = false) {
  ChiRecursionSpec s;
  s.m = m;
  s.base = make_base_chi(m, cfg.chi_R, cfg.chi_sigma);
  s.base_support_radius = cfg.chi_R;
  s.d_kind = d;
  s.log_R_prime = log_Rp;
  s.n_max = n_max;
  s.mutate_undamped = undamped;
  return s;
}

struct ChiProposalSpec {
  SmallPhoton first_small;  // the small photon of sector m+2
  double shell_power = -5.0;
  int only_j = -1;          // restrict the top level to one summand
  bool integrate_last = false;  // top level only
};

// Sampler following the χ recursion down to the Gaussian base sector.
ProposalPtr chi_proposal(const VerifyConfig& cfg, int m, int n, const ChiProposalSpec& ps) {
  if (n == m) return gaussian_proposal(m, cfg.chi_sigma);
  const ProposalPtr inner = chi_proposal(cfg, m, n - 2, {ps.first_small, ps.shell_power, -1, false});
  std::vector<ProposalPtr> parts;
  for (int j = 0; j < n - 1; ++j) {
    if (ps.only_j >= 0 && j != ps.only_j) continue;
    ChiStep st;
    st.inner = inner;
    st.small_slot = j;
    st.shell_n = n;
    st.shell_power = ps.shell_power;
    st.small = n == m + 2 ? ps.first_small : SmallPhoton{};
    st.integrate_last = ps.integrate_last;
    parts.push_back(chi_step_proposal(st));
  }
  return mixture(parts);
}

// f with the last-photon factors 1_{E_n} |k_last|^a removed; |f|² integrates
// over k_last in closed form, so the shell radius is never materialized.
struct ShellMarginal {
  SectorFunction reduced;
  double exponent = 0;
};

ShellMarginal marginalize_shell(const SectorFunction& f) {
  const int n = f.sector;
  if (n < 2 || !f.integrated.empty()) throw capability_error("shell marginal needs a plain sector n >= 2");
  ShellMarginal out;
  out.reduced.sector = n;
  bool first = true;
  for (const Term& t : f.terms) {
    Term r;
    r.coefficient = t.coefficient;
    int shells = 0, powers = 0;
    double a = 0;
    for (const Factor& x : t.factors) {
      if (x.kind == FactorKind::SetIndicator && x.pred.kind == SetKind::E && !x.pred.negated && x.pred.n == n &&
          x.pred.shell_scale == 1.0 && !x.slots.empty() && x.slots.back() == n - 1) {
        ++shells;
        continue;
      }
      if (x.kind == FactorKind::RadialPower && x.map == AffineCoordMap::photon(n, n - 1)) {
        ++powers;
        a = x.param;
        continue;
      }
      Factor y = x;
      // p + k_last is a fermion translate, so the fermion absorbs k_last.
      const bool has_map = x.kind != FactorKind::SetIndicator && x.kind != FactorKind::PnPower;
      if (has_map && x.map.coef[n - 1] != 0 && x.map.coef[n - 1] == x.map.coef[n])
        y.map.coef[n - 1] = 0;
      else if (x.reads_photon(n - 1, n))
        throw capability_error("a factor besides the shell reads the last photon");
      r.factors.push_back(std::move(y));
    }
    if (shells != 1 || powers != 1) throw capability_error("term lacks the shell structure");
    if (!first && a != out.exponent) throw capability_error("terms disagree on the shell exponent");
    out.exponent = a;
    first = false;
    out.reduced.terms.push_back(std::move(r));
  }
  return out;
}

// ln ∫_{E_n} |k|^{2a} dk with p_n read from the other photons.
double shell_log_weight(const ShellMarginal& s, const ConfigPoint& x) {
  const int n = s.reduced.sector;
  const PnValue p = p_n(n, std::vector<Coord>(x.photons.begin(), x.photons.end() - 1));
  if (p.overflow) return kNegInf;
  const double c = 2.0 * s.exponent + 3.0;
  if (c == 0.0) return std::log(kTwoPi) + p.log_value;
  const double P = p.value;
  const double lead = std::log(4.0 * kPi / std::abs(c));
  return c < 0.0 ? lead + log_sub(c * P / 2.0, c * P) : lead + log_sub(c * P, c * P / 2.0);
}

MCEstimate marginal_norm_sq(const SectorFunction& f, const Proposal& q, std::uint64_t seed, const MCOptions& opt) {
  const ShellMarginal s = marginalize_shell(f);
  return mc_weighted_norm_sq(s.reduced, [&s](const ConfigPoint& x) { return shell_log_weight(s, x); }, q, seed, opt);
}

SmallPhoton exterior(double log_radius) {
  SmallPhoton s;
  s.kind = SmallPhoton::Kind::Exterior;
  s.log_radius = log_radius;
  return s;
}

MomentumVector random_vector(Stream& rng, double scale) {
  return MomentumVector{rng.uniform() - 0.5, rng.uniform() - 0.5, rng.uniform() - 0.5} * (2.0 * scale);
}

// Gaussian product on every coordinate with random widths and centers.
SectorFunction random_gaussian(Stream& rng, int sector) {
  Term t;
  for (int s = 0; s <= sector; ++s) {
    AffineCoordMap m = s < sector ? AffineCoordMap::photon(sector, s) : AffineCoordMap::fermion(sector);
    m.shift = random_vector(rng, 0.6) * -1.0;
    t.factors.push_back(Factor::gaussian(0.6 + 0.6 * rng.uniform(), m));
  }
  SectorFunction f;
  f.sector = sector;
  f.terms.push_back(std::move(t));
  return f;
}

Coord gaussian_coord(Stream& rng, double sigma) {
  return Coord::linear(MomentumVector{rng.normal(), rng.normal(), rng.normal()} * sigma);
}

// A point of ℝ^{3n+3} outside F_n × ℝ³ whose fermion keeps the base argument O(1).
bool outside_point(Stream& rng, int n, const Proposal& near, ConfigPoint& out) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    const int strategy = static_cast<int>(rng.below(3));
    ConfigPoint x;
    if (strategy == 0) {
      std::vector<Coord> k;
      for (int i = 0; i < n; ++i) k.push_back(gaussian_coord(rng, 1.0));
      x = ConfigPoint::make(std::move(k), gaussian_coord(rng, 1.0).v);
    } else if (strategy == 1 || n - 1 < 2) {
      // Push the shell coordinate just outside its shell.
      x = near.sample(rng);
      Coord& c = x.photons[n - 1];
      if (!std::isfinite(c.L)) continue;
      c.L *= rng.uniform() < 0.5 ? 0.3 + 0.2 * rng.uniform() : 2.0 + rng.uniform();
    } else {
      // F_{n-1} × (E_n shell): empty for the recursion by the disjointness lemma.
      FSample s = sample_F_n(rng, n - 1, 1.0);
      std::vector<Coord> k = s.point.photons;
      const PnValue p = p_n(n, k);
      if (p.overflow) continue;
      k.push_back(Coord::radial(sample_log_shell(rng, p.value / 2.0, p.value).k));
      x = ConfigPoint::make(std::move(k), gaussian_coord(rng, 0.5).v);
      x.fermion_coef[n - 1] = -1;
      x.fermion_coef[rng.below(n - 1)] -= 1;
    }
    if (in_F_n(x.photons)) continue;
    out = std::move(x);
    return true;
  }
  return false;
}

double log_rel_residual(const LogValue& res, const LogValue& a, const LogValue& b) {
  if (res.is_zero()) return 0.0;
  const double s = std::max(a.log_abs(), b.log_abs());
  return std::exp(res.log_abs() - s);
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "";
}

Status worst(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Inconclusive || b == Status::Inconclusive) return Status::Inconclusive;
  return Status::Pass;
}

void CheckResult::add(CheckItem item) {
  status = worst(status, item.status);
  items.push_back(std::move(item));
}

void VerifyConfig::validate() const {
  auto positive = [](std::int64_t v, const char* what) {
    if (v < 2) throw std::invalid_argument(std::string(what) + " must be at least 2");
  };
  positive(set_trials, "set_trials");
  positive(membership_points, "membership_points");
  positive(support_points, "support_points");
  positive(cancellation_points, "cancellation_points");
  positive(norm_samples, "norm_samples");
  positive(bound_samples, "bound_samples");
  positive(bound_integral_samples, "bound_integral_samples");
  positive(pairing_samples, "pairing_samples");
  positive(pairing_integral_samples, "pairing_integral_samples");
  positive(symmetrizer_samples, "symmetrizer_samples");
  positive(density_samples, "density_samples");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  for (int n : set_lemma_n)
    if (n < 3 || n > 5) throw std::invalid_argument("set lemma sectors must lie in 3..5");
  if (chi_m < 0 || chi_m > 2) throw std::invalid_argument("chi_m must lie in 0..2");
  if (!(chi_R > 0.0) || !(chi_sigma > 0.0)) throw std::invalid_argument("chi_R and chi_sigma must be positive");
  if (R_prime_factors.empty()) throw std::invalid_argument("R_prime_factors must not be empty");
  for (std::size_t i = 0; i < R_prime_factors.size(); ++i) {
    if (!(R_prime_factors[i] >= 1.0)) throw std::invalid_argument("R_prime_factors must be >= 1");
    if (i > 0 && !(R_prime_factors[i] > R_prime_factors[i - 1]))
      throw std::invalid_argument("R_prime_factors must increase");
  }
  for (int n : cutoff_n)
    if (n < 1 || n > 3) throw std::invalid_argument("cutoff_n entries must lie in 1..3");
  for (double R : cutoff_R)
    if (!(R >= 1.0)) throw std::invalid_argument("cutoff_R entries must be >= 1");
  if (!(cutoff_a >= 1.0)) throw std::invalid_argument("cutoff_a must be >= 1");
  quad.validate();
  if (lower_bound_N < 1 || lower_bound_N > 2) throw std::invalid_argument("lower_bound_N must be 1 or 2");
  if (c3_max_index < 1 || c3_max_index > 1000) throw std::invalid_argument("c3_max_index must lie in 1..1000");
}

CheckResult check_radial_integrals() {
  CheckResult r;
  r.name = "radial_integrals";
  r.tolerance = "rel 1e-8 for values; strict inequality for the bound";
  const std::vector<ReferenceIntegral> refs = reference_radial_integrals();
  for (const ReferenceIntegral& ref : refs) {
    if (!ref.converged) {
      r.add({ref.name, Status::Inconclusive, ref.computed, ref.stated, ref.abs_error, "quadrature did not converge"});
      continue;
    }
    if (ref.is_bound) {
      CheckItem it{ref.name + " < 5 pi", ref.computed < ref.stated ? Status::Pass : Status::Fail, ref.computed,
                   ref.stated, ref.abs_error, "computed < bound"};
      r.add(it);
      r.add(rel_item(ref.name + " = 5 pi^2 / 8", ref.computed, 5.0 * kPi * kPi / 8.0, 1e-8));
    } else {
      CheckItem it = rel_item(ref.name, ref.computed, ref.stated, 1e-8);
      it.std_error = ref.abs_error;
      r.add(it);
    }
  }
  for (double p : {1.0, std::exp(2.0), 10.0, 30.0, 100.0}) {
    const AdaptiveResult q = shell_integral_quadrature(p);
    CheckItem it = rel_item("shell integral 2 pi p at p=" + fmt(p), q.value, closed_shell_integral(p), 1e-8);
    if (!q.converged) it.status = Status::Inconclusive;
    r.add(it);
  }
  r.observed = refs[2].computed;
  r.expected = refs[2].stated;
  r.details =
      "integrals of |k|^-5 over |k|>=1, (k^2+1)^-4 |k|^-1 and (k^2+1)^-4 |k|^-2 by adaptive quadrature; "
      "the intermediate value 4 pi + pi/12 for the last one is not reproduced by direct evaluation, which "
      "gives 5 pi^2/8, so only the final bound 5 pi is asserted";
  return r;
}

CheckResult check_set_lemma(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "set_lemma";
  r.seed = cfg.seed;
  r.tolerance = "0 violations; mutation must produce violations";
  std::int64_t total = 0;
  for (int n : cfg.set_lemma_n) {
    const std::int64_t v = disjointness_witness_scan(derive_seed(cfg.seed, n), n, cfg.set_trials);
    total += v;
    r.add({"F_" + std::to_string(n - 1) + " x R^3 inside F_" + std::to_string(n) + ", trials=" +
               std::to_string(cfg.set_trials),
           v == 0 ? Status::Pass : Status::Fail, static_cast<double>(v), 0.0, 0.0, "== 0"});
  }
  const std::int64_t mutated_trials = std::min<std::int64_t>(cfg.set_trials, 100000);
  const std::int64_t mv = disjointness_witness_scan(derive_seed(cfg.seed, 99), 3, mutated_trials, 0.5);
  r.add({"mutation: halved shell exponent, n=3", mv > 0 ? Status::Pass : Status::Inconclusive,
         static_cast<double>(mv), 1.0, 0.0, "mutation control: >= 1 violation"});
  r.observed = static_cast<double>(total);
  r.expected = 0.0;
  r.details = "constructive samples of F_{n-1} x R^3 tested with the fast F_n predicate; the mutated "
              "predicate scales the top-level shell edges by 1/2 and found " + std::to_string(mv) + " violations";
  return r;
}

CheckResult check_fast_membership(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "fast_membership";
  r.seed = cfg.seed;
  r.tolerance = "0 disagreements with the permutation oracle";
  std::int64_t total = 0;
  for (int n = 2; n <= 4; ++n) {
    std::int64_t disagree = 0, positives = 0;
    for (std::int64_t t = 0; t < cfg.membership_points; ++t) {
      Stream rng(derive_seed(derive_seed(cfg.seed, n), t));
      std::vector<Coord> k;
      switch (rng.below(4)) {
        case 0:
          for (int i = 0; i < n; ++i) k.push_back(gaussian_coord(rng, 1.0 + 10.0 * rng.uniform()));
          break;
        case 1:
          k = sample_F_n(rng, n, 1.0).point.photons;
          break;
        case 2: {
          // Members with one coordinate moved near a shell edge.
          k = sample_F_n(rng, n, 1.0).point.photons;
          Coord& c = k[rng.below(n)];
          const double L = log_norm(c);
          c = Coord::radial(uniform_direction(rng), L * (0.4 + 1.4 * rng.uniform()));
          break;
        }
        default:
          if (n >= 3) {
            k = sample_F_n(rng, n - 1, 1.0).point.photons;
            const PnValue p = p_n(n, k);
            if (p.overflow)
              k.push_back(gaussian_coord(rng, 1.0));
            else
              k.push_back(Coord::radial(sample_log_shell(rng, p.value / 2.0, p.value).k));
          } else {
            k = sample_F_n(rng, n, 1.0 + 3.0 * rng.uniform()).point.photons;
          }
          break;
      }
      for (int i = n - 1; i > 0; --i) std::swap(k[i], k[rng.below(i + 1)]);
      const bool fast = in_F_n(k);
      positives += fast;
      if (fast != in_F_n_bruteforce(k)) ++disagree;
    }
    total += disagree;
    r.add({"n=" + std::to_string(n) + ", points=" + std::to_string(cfg.membership_points) + ", members=" +
               std::to_string(positives),
           disagree == 0 && positives > 0 ? Status::Pass : (disagree ? Status::Fail : Status::Inconclusive),
           static_cast<double>(disagree), 0.0, 0.0, "== 0"});
  }
  r.observed = static_cast<double>(total);
  r.details = "max-norm reduction versus enumeration of all n! orderings of the recursive definition";
  return r;
}

CheckResult check_chi_support(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "chi_support";
  r.seed = cfg.seed;
  r.tolerance = "exact zero outside F_n x R^3";
  std::int64_t nonzero_total = 0;
  for (int m : {0, 1}) {
    const ChiSequence seq = build_chi_sequence(chi_spec(cfg, m, m + 4, DomainKind::F));
    for (int n : {m + 2, m + 4}) {
      const SectorFunction& f = seq.state.sectors.at(n);
      const ProposalPtr near = chi_proposal(cfg, m, n, {});
      std::int64_t tested = 0, nonzero = 0;
      for (int t = 0; t < cfg.support_points; ++t) {
        Stream rng(derive_seed(derive_seed(cfg.seed, 10 * m + n), t));
        ConfigPoint x;
        if (!outside_point(rng, n, *near, x)) continue;
        ++tested;
        if (!evaluate_log(f, x).is_zero()) ++nonzero;
      }
      nonzero_total += nonzero;
      std::int64_t inside = 0;
      for (int t = 0; t < 4000; ++t) {
        Stream rng(derive_seed(derive_seed(cfg.seed, 100 + 10 * m + n), t));
        const ConfigPoint x = near->sample(rng);
        if (!evaluate_log(f, x).is_zero()) {
          ++inside;
          if (!in_F_n(x.photons)) ++nonzero;
        }
      }
      Status s = nonzero == 0 ? Status::Pass : Status::Fail;
      if (s == Status::Pass && (tested < cfg.support_points || inside == 0)) s = Status::Inconclusive;
      r.add({"m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", outside points=" + std::to_string(tested) +
                 ", nonzero inside samples=" + std::to_string(inside),
             s, static_cast<double>(nonzero), 0.0, 0.0, "nonzero values outside support == 0"});
    }
  }
  r.observed = static_cast<double>(nonzero_total);
  r.details = "outside points: Gaussian points, shell coordinates pushed out of their shell, and F_{n-1} x E_n "
              "points with the fermion aligned to the base argument; D_{m+1} = F_{m+1}";
  return r;
}

CheckResult check_cancellation(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "cancellation";
  r.seed = cfg.seed;
  r.tolerance = "relative residual <= 1e-9; identically zero for n = m + 4";
  const double log_Rp = std::log(2.0 * cfg.chi_R);
  double worst_rel = 0.0;
  for (double scale : {1.0, 2.0}) {
    ChiRecursionSpec spec = chi_spec(cfg, 0, 4, DomainKind::Ball, log_Rp);
    spec.base = spec.base.scaled(Coefficient::of(scale));
    const ChiSequence seq = build_chi_sequence(spec);
    const ProposalPtr chi2 = chi_proposal(cfg, 0, 2, {exterior(log_Rp)});
    for (int n : {2, 4}) {
      if (scale != 1.0 && n == 4) continue;
      const SectorFunction down = apply_A_minus_term(seq.state.sectors.at(n), n - 1, cfg.quad);
      if (!down.integrated.empty()) {
        r.add({"closed shell form unavailable for n=" + std::to_string(n), Status::Inconclusive, 0, 0, 0, ""});
        continue;
      }
      const SectorFunction up = apply_A_plus(seq.state.sectors.at(n - 2));
      const SectorFunction inside = multiply_indicator(up, chi_domain_indicator(spec, false));
      const int points = scale == 1.0 ? cfg.cancellation_points : std::min(cfg.cancellation_points, 200);
      double max_rel = 0.0;
      std::int64_t nonzero = 0, exact = 0;
      for (int t = 0; t < points; ++t) {
        Stream rng(derive_seed(derive_seed(cfg.seed, n + static_cast<int>(10 * scale)), t));
        ConfigPoint x;
        if (n == 2) {
          const BallDraw b = sample_ball(rng, 2.0 * std::exp(log_Rp));
          x = ConfigPoint::make({Coord::linear(b.k)}, gaussian_coord(rng, 0.5).v);
          x.fermion_coef[0] = -1;
        } else {
          x = chi2->sample(rng);
          const int slot = static_cast<int>(rng.below(3));
          x.photons.insert(x.photons.begin() + slot, gaussian_coord(rng, 1.0));
          x.fermion_coef.insert(x.fermion_coef.begin() + slot, -1);
        }
        const LogValue a = evaluate_log(up, x);
        const LogValue b = evaluate_log(down, x);
        LogValue res = b + a;
        if (n == 2) res += -evaluate_log(inside, x);
        nonzero += !a.is_zero();
        exact += res.is_zero();
        max_rel = std::max(max_rel, log_rel_residual(res, a, b));
      }
      worst_rel = std::max(worst_rel, max_rel);
      Status s = max_rel <= 1e-9 ? Status::Pass : Status::Fail;
      if (n == 4 && exact != points) s = Status::Fail;
      if (s == Status::Pass && nonzero == 0) s = Status::Inconclusive;
      r.add({"(m,n)=(0," + std::to_string(n) + ")" + (scale != 1.0 ? " with base x2" : "") +
                 ", points=" + std::to_string(points) + ", nonzero A+ values=" + std::to_string(nonzero) +
                 ", exact zeros=" + std::to_string(exact),
             s, max_rel, n == 2 ? 1e-9 : 0.0, 0.0, n == 2 ? "max relative residual <= 1e-9" : "residual == 0"});
    }
  }
  r.observed = worst_rel;
  r.expected = 1e-9;
  r.details = "A-_{n,n} chi_n uses the closed shell integral 2 pi p_n against the symbolic 1/p_n factor; "
              "D_1 is the ball of radius 2R";
  return r;
}

CheckResult check_norm_recursion(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "norm_recursion";
  r.seed = cfg.seed;
  r.tolerance = "MC ratio <= bound + 3 SE";
  const MCOptions opt = mc(cfg, cfg.norm_samples);
  double worst_ratio = 0.0;
  for (int m : {0, 1}) {
    const ChiSequence seq = build_chi_sequence(chi_spec(cfg, m, m + 4, DomainKind::F));
    MCEstimate prev = mc_norm_sq(seq.state.sectors.at(m), *gaussian_proposal(m, cfg.chi_sigma),
                                 derive_seed(cfg.seed, 1000 + m), opt);
    for (int n : {m + 2, m + 4}) {
      const double step = kTwoPi * kTwoPi * n * std::exp(-2.0 * n);
      ChiProposalSpec top;
      top.integrate_last = true;
      const MCEstimate cur = marginal_norm_sq(seq.state.sectors.at(n), *chi_proposal(cfg, m, n, top),
                                        derive_seed(cfg.seed, 100 * m + n), opt);
      CheckItem it = bound_item("m=" + std::to_string(m) + " |chi_" + std::to_string(n) + "|^2 / |chi_" +
                                    std::to_string(n - 2) + "|^2 <= (2pi)^2 n e^-2n",
                                cur, step, prev);
      worst_ratio = std::max(worst_ratio, it.observed / step);
      r.add(it);
      const double split_step = kTwoPi * kTwoPi * std::exp(-2.0 * n) / n;
      for (int j = 0; j < n - 1; ++j) {
        ChiProposalSpec ps;
        ps.only_j = j;
        ps.integrate_last = true;
        const MCEstimate part = marginal_norm_sq(seq.split.at(n)[j], *chi_proposal(cfg, m, n, ps),
                                           derive_seed(cfg.seed, 10000 + 100 * m + 10 * n + j), opt);
        r.add(bound_item("m=" + std::to_string(m) + " |chi_" + std::to_string(n) + "," + std::to_string(j + 1) +
                             "|^2 / |chi_" + std::to_string(n - 2) + "|^2 <= (2pi)^2 e^-2n / n",
                         part, split_step, prev));
      }
      prev = cur;
    }
  }
  // Without 1/p_n and with |k_n|^{-3/2} the sector norm is infinite.
  const ChiSequence bad = build_chi_sequence(chi_spec(cfg, 0, 2, DomainKind::F, 0.0, true));
  const MCEstimate base = mc_norm_sq(bad.state.sectors.at(0), *gaussian_proposal(0, cfg.chi_sigma),
                                     derive_seed(cfg.seed, 7000), opt);
  ChiProposalSpec ps;
  ps.shell_power = -3.0;
  ps.integrate_last = true;
  const MCEstimate undamped = marginal_norm_sq(bad.state.sectors.at(2), *chi_proposal(cfg, 0, 2, ps),
                                         derive_seed(cfg.seed, 7001), opt);
  r.add(control_exceeds("mutation: undamped chi_2, m=0",
                     bound_item("", undamped, kTwoPi * kTwoPi * 2.0 * std::exp(-4.0), base)));
  r.observed = worst_ratio;
  r.expected = 1.0;
  r.details = "observed/bound ratios; D_{m+1} = F_{m+1}; samples per estimate " + std::to_string(cfg.norm_samples);
  return r;
}

CheckResult check_A_minus_term_bounds(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "A_minus_term_bounds";
  r.seed = cfg.seed;
  r.tolerance = "MC ratio <= bound + 3 SE";
  const int m = 1, n = 3;
  const ChiSequence seq = build_chi_sequence(chi_spec(cfg, m, n, DomainKind::F));
  const MCEstimate base = mc_norm_sq(seq.state.sectors.at(m), *gaussian_proposal(m, cfg.chi_sigma),
                                     derive_seed(cfg.seed, 1), mc(cfg, cfg.norm_samples));
  const double eq_bound = 10.0 * kPi * kPi * std::exp(-2.0 * n) / n;
  const double neq_bound = kTwoPi * kTwoPi * kTwoPi * std::exp(-2.0 * n) / n;
  // l = j removes the small photon: only the base and the shell coordinate remain.
  QuadratureSpec radial_only = cfg.quad;
  radial_only.angular_order = 2;
  // The k_l integrand jumps where k_l moves the top photon across its shell;
  // the bound holds by many orders of magnitude, so a coarse rule suffices.
  QuadratureSpec coarse = cfg.quad;
  coarse.radial_order = std::min(coarse.radial_order, 8);
  coarse.angular_order = std::min(coarse.angular_order, 6);
  ChiStep eq_step;
  eq_step.inner = gaussian_proposal(m, cfg.chi_sigma);
  eq_step.shell_n = n;
  eq_step.unbounded = true;
  const ProposalPtr eq_prop = chi_step_proposal(eq_step);
  ChiStep neq_step;
  neq_step.inner = gaussian_proposal(m - 1, cfg.chi_sigma);
  neq_step.small_slot = 0;
  neq_step.shell_n = n;
  neq_step.unbounded = true;
  const ProposalPtr neq_prop = chi_step_proposal(neq_step);
  double worst_ratio = 0.0;
  for (int j = 0; j < n - 1; ++j) {
    const SectorFunction eq = apply_A_minus_term(seq.split.at(n)[j], j, radial_only);
    const MCEstimate e = mc_norm_sq(eq, *eq_prop, derive_seed(cfg.seed, 10 + j), mc(cfg, cfg.bound_samples));
    CheckItem it = bound_item("|A-_{3,l} chi_{3,j}|^2, l=j=" + std::to_string(j + 1), e, eq_bound, base);
    worst_ratio = std::max(worst_ratio, it.observed / eq_bound);
    r.add(it);
    const int l = 1 - j;
    const SectorFunction neq = apply_A_minus_term(seq.split.at(n)[j], l, coarse);
    const MCEstimate ne =
        mc_norm_sq(neq, *neq_prop, derive_seed(cfg.seed, 20 + j), mc(cfg, cfg.bound_integral_samples));
    CheckItem it2 = bound_item("|A-_{3,l} chi_{3,j}|^2, l=" + std::to_string(l + 1) + ", j=" + std::to_string(j + 1),
                               ne, neq_bound, base);
    worst_ratio = std::max(worst_ratio, it2.observed / neq_bound);
    r.add(it2);
  }
  const ChiSequence bad = build_chi_sequence(chi_spec(cfg, m, n, DomainKind::F, 0.0, true));
  ChiStep bad_step = eq_step;
  bad_step.shell_power = -3.5;
  const SectorFunction bad_eq = apply_A_minus_term(bad.split.at(n)[0], 0, radial_only);
  const MCEstimate be =
      mc_norm_sq(bad_eq, *chi_step_proposal(bad_step), derive_seed(cfg.seed, 30), mc(cfg, cfg.bound_samples));
  r.add(control_exceeds("mutation: undamped chi_3, l=j=1", bound_item("", be, eq_bound, base)));
  int terms = 0;
  const double C1 = constant_C1(false, &terms);
  r.observed = worst_ratio;
  r.expected = 1.0;
  r.details = "m=1, n=3, D_2 = F_2; C1 = " + fmt(C1) + " from " + std::to_string(terms) + " series terms";
  return r;
}

CheckResult check_cutoff_symmetry(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "cutoff_symmetry";
  r.seed = cfg.seed;
  r.tolerance = "|<A^{R+} phi|psi> - <phi|A^{R-} psi>| <= 3 combined SE";
  double worst_z = 0.0;
  for (int n : cfg.cutoff_n) {
    for (double R : cfg.cutoff_R) {
      Stream rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(100 * n + R)));
      const SectorFunction phi = random_gaussian(rng, n - 1);
      const SectorFunction psi = random_gaussian(rng, n);
      const CutoffSpec spec{R, cfg.cutoff_a};
      const std::uint64_t s = derive_seed(cfg.seed, static_cast<std::uint64_t>(1000 * n + R));
      const MCEstimate lhs =
          mc_inner(apply_cutoff_A_plus(phi, spec), psi, *gaussian_proposal(n, 1.0), s, mc(cfg, cfg.pairing_samples));
      const MCEstimate rhs = mc_inner(phi, apply_cutoff_A_minus(psi, spec, cfg.quad), *gaussian_proposal(n - 1, 1.0),
                                      s, mc(cfg, cfg.pairing_integral_samples));
      CheckItem it = equal_item("n=" + std::to_string(n) + ", R=" + fmt(R) + ": lhs " + fmt(lhs.value().real()) +
                                    ", rhs " + fmt(rhs.value().real()),
                                lhs, rhs);
      if (it.std_error > 0) worst_z = std::max(worst_z, it.observed / it.std_error);
      r.add(it);
    }
  }
  {
    // Control pair whose overlap moves from p ≈ c to p ≈ -c when the shift sign flips.
    const MomentumVector c{0.9, 0.0, 0.0};
    SectorFunction phi, psi;
    phi.sector = 0;
    psi.sector = 1;
    AffineCoordMap pf = AffineCoordMap::fermion(0);
    pf.shift = c * -1.0;
    phi.terms.push_back({Coefficient{}, {Factor::gaussian(0.7, pf)}});
    AffineCoordMap kp = AffineCoordMap::photon(1, 0);
    kp.shift = c * -1.0;
    psi.terms.push_back({Coefficient{}, {Factor::gaussian(0.7, kp), Factor::gaussian(0.7, AffineCoordMap::fermion(1))}});
    const CutoffSpec spec{cfg.cutoff_R.back(), cfg.cutoff_a};
    const std::uint64_t s = derive_seed(cfg.seed, 77);
    const MCEstimate lhs =
        mc_inner(apply_cutoff_A_plus(phi, spec), psi, *gaussian_proposal(1, 1.0), s, mc(cfg, cfg.pairing_samples));
    const MCEstimate good = mc_inner(phi, apply_cutoff_A_minus(psi, spec, cfg.quad), *gaussian_proposal(0, 1.0), s,
                                     mc(cfg, cfg.pairing_integral_samples));
    const MCEstimate bad = mc_inner(phi, apply_cutoff_A_minus(psi, spec, cfg.quad, +1), *gaussian_proposal(0, 1.0), s,
                                    mc(cfg, cfg.pairing_integral_samples));
    CheckItem ok = equal_item("control pair n=1, R=" + fmt(spec.R) + ": lhs " + fmt(lhs.value().real()) + ", rhs " +
                                  fmt(good.value().real()) + ", mutated rhs " + fmt(bad.value().real()),
                              lhs, good);
    worst_z = std::max(worst_z, ok.std_error > 0 ? ok.observed / ok.std_error : 0.0);
    r.add(ok);
    r.add(control_item("mutation: fermion shift p + k on the control pair", equal_item("", lhs, bad)));
  }
  // ψ = 0 pairs to zero on both sides.
  SectorFunction zero;
  zero.sector = 1;
  const SectorFunction phi0 = make_base_chi(0, 1.0, 1.0);
  const CutoffSpec spec{2.0, cfg.cutoff_a};
  const MCEstimate z1 = mc_inner(apply_cutoff_A_plus(phi0, spec), zero, *gaussian_proposal(1, 1.0), 1, mc(cfg, 100));
  const MCEstimate z2 = mc_inner(phi0, apply_cutoff_A_minus(zero, spec, cfg.quad), *gaussian_proposal(0, 1.0), 1,
                                 mc(cfg, 100));
  r.add({"psi = 0", z1.log_abs() == kNegInf && z2.log_abs() == kNegInf ? Status::Pass : Status::Fail, 0, 0, 0,
         "both sides == 0"});
  r.observed = worst_z;
  r.expected = 3.0;
  r.details = "randomized Gaussian pairs; annulus B_R minus B_{R^-a} with a=" + fmt(cfg.cutoff_a) +
              "; both sides share the master seed; observed is the largest |difference|/SE";
  return r;
}

CheckResult check_full_symmetry_truncated(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "full_symmetry_truncated";
  r.seed = cfg.seed;
  r.tolerance = "|<A phi|psi> - <phi|A psi>| <= 3 combined SE per sector pair";
  const ChiSequence phi = build_chi_sequence(chi_spec(cfg, 0, 2, DomainKind::F));
  const ChiSequence psi = build_chi_sequence(chi_spec(cfg, 1, 3, DomainKind::F));
  const SectorFunction& phi0 = phi.state.sectors.at(0);
  const SectorFunction& phi2 = phi.state.sectors.at(2);
  const SectorFunction& psi1 = psi.state.sectors.at(1);
  const SectorFunction& psi3 = psi.state.sectors.at(3);
  const MCOptions big = mc(cfg, cfg.pairing_samples), small = mc(cfg, cfg.pairing_integral_samples);
  std::vector<MCEstimate> lhs_parts, rhs_parts;
  auto pair = [&](const std::string& label, const MCEstimate& a, const MCEstimate& b) {
    lhs_parts.push_back(a);
    rhs_parts.push_back(b);
    r.add(equal_item(label, a, b));
  };
  auto conj = [](MCEstimate e) {
    e.mean = std::conj(e.mean);
    return e;
  };
  // (φ_0, ψ_1)
  pair("<A+ phi_0|psi_1> vs <phi_0|A- psi_1>",
       mc_inner(apply_A_plus(phi0), psi1, *gaussian_proposal(1, cfg.chi_sigma), derive_seed(cfg.seed, 1), big),
       mc_inner(phi0, apply_A_minus(psi1, cfg.quad), *gaussian_proposal(0, cfg.chi_sigma), derive_seed(cfg.seed, 1),
                small));
  // (φ_2, ψ_1): the shell integrand is |k|^{-3}, so the shell is drawn log-uniformly.
  ChiStep st;
  st.inner = gaussian_proposal(0, cfg.chi_sigma);
  st.small_slot = 0;
  st.shell_n = 2;
  st.shell_power = -3.0;
  st.small.kind = SmallPhoton::Kind::Gaussian;
  st.small.sigma = cfg.chi_sigma;
  pair("<A- phi_2|psi_1> vs <phi_2|A+ psi_1>",
       conj(mc_inner(psi1, apply_A_minus(phi2, cfg.quad), *gaussian_proposal(1, cfg.chi_sigma),
                     derive_seed(cfg.seed, 2), big)),
       mc_inner(phi2, apply_A_plus(psi1), *chi_step_proposal(st), derive_seed(cfg.seed, 2), big));
  // (φ_2, ψ_3): disjoint shells make both sides vanish.
  pair("<A+ phi_2|psi_3> vs <phi_2|A- psi_3>",
       conj(mc_inner(psi3, apply_A_plus(phi2), *chi_proposal(cfg, 1, 3, {}), derive_seed(cfg.seed, 3), big)),
       mc_inner(phi2, apply_A_minus(psi3, cfg.quad), *chi_proposal(cfg, 0, 2, {}), derive_seed(cfg.seed, 3), small));
  const MCEstimate L = combine(lhs_parts), Rr = combine(rhs_parts);
  CheckItem total = equal_item("total m=0 vs m=1", L, Rr);
  r.add(total);
  // Same-parity states: A maps even sectors to odd ones, so both pairings vanish structurally.
  r.add({"m=0 vs m=0 (phi = psi): both pairings structurally 0, imaginary part 0", Status::Pass, 0.0, 0.0, 0.0,
         "== 0"});
  // Tail beyond the truncation, relative to the base norm, from the product bound.
  double tail_phi = 1.0, tail_psi = 1.0;
  for (int j = 2; j <= 4; j += 2) tail_phi *= kTwoPi * kTwoPi * j * std::exp(-2.0 * j);
  for (int j = 2; j <= 4; j += 2) tail_psi *= kTwoPi * kTwoPi * j * std::exp(-2.0 * (1 + j));
  r.observed = total.observed;
  r.expected = 0.0;
  r.std_error = total.std_error;
  r.details = "phi = chi(m=0) truncated at n=2, psi = chi(m=1) truncated at n=3, D = F; product-bound tail "
              "|chi_next|^2/|chi_m|^2: phi " + fmt(tail_phi) + ", psi " + fmt(tail_psi) +
              " (raise n_max to shrink it); <A phi|psi> = " + fmt(L.value().real()) + ", <phi|A psi> = " +
              fmt(Rr.value().real());
  if (tail_phi > 1.0 || tail_psi > 1.0) r.status = worst(r.status, Status::Inconclusive);
  return r;
}

CheckResult check_symmetrizer(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "symmetrizer";
  r.seed = cfg.seed;
  r.tolerance = "MC within 3 SE; pointwise relative residual <= 1e-9";
  Stream rng(derive_seed(cfg.seed, 1));
  const SectorFunction f = random_gaussian(rng, 2);
  const SectorFunction g = random_gaussian(rng, 2);
  const SectorFunction Sf = symmetrize(f);
  const SectorFunction Sg = symmetrize(g);
  const ProposalPtr q = gaussian_proposal(2, 1.0);
  const MCOptions opt = mc(cfg, cfg.symmetrizer_samples);
  const std::uint64_t s = derive_seed(cfg.seed, 2);
  const MCEstimate nf = mc_norm_sq(f, *q, s, opt);
  const MCEstimate nSf = mc_norm_sq(Sf, *q, s, opt);
  r.add(bound_item("contraction |S f|^2 <= |f|^2", nSf, 1.0, nf));
  const MCEstimate nUf = mc_norm_sq(symmetrize(f, false), *q, s, opt);
  r.add(control_item("mutation: unnormalized sum", bound_item("", nUf, 1.0, nf)));
  r.add(equal_item("adjoint <S g|S f> = <S g|f>", mc_inner(Sg, Sf, *q, s, opt), mc_inner(Sg, f, *q, s, opt)));

  // Pointwise identities.
  Term sym;
  for (int c = 0; c <= 2; ++c)
    sym.factors.push_back(Factor::gaussian(0.9, c < 2 ? AffineCoordMap::photon(2, c) : AffineCoordMap::fermion(2)));
  SectorFunction h;
  h.sector = 2;
  h.terms.push_back(sym);
  const SectorFunction SSf = symmetrize(Sf);
  const SectorFunction Sh = symmetrize(h);
  const SectorFunction lhs = symmetrize(apply_A_plus(Sf));
  const SectorFunction rhs = apply_A_plus(symmetrize(Sf));
  double idem = 0.0, fixed = 0.0, comm = 0.0;
  for (int t = 0; t < 1000; ++t) {
    Stream prng(derive_seed(cfg.seed, 1000 + t));
    const ConfigPoint x = q->sample(prng);
    auto rel = [](std::complex<double> a, std::complex<double> b) {
      const double d = std::abs(a - b), s = std::max(std::abs(a), std::abs(b));
      return s == 0.0 ? 0.0 : d / s;
    };
    idem = std::max(idem, rel(evaluate(SSf, x), evaluate(Sf, x)));
    fixed = std::max(fixed, rel(evaluate(Sh, x), evaluate(h, x)));
    std::vector<Coord> k = x.photons;
    k.push_back(gaussian_coord(prng, 1.0));
    const ConfigPoint y = ConfigPoint::make(k, x.fermion_base);
    comm = std::max(comm, rel(evaluate(lhs, y), evaluate(rhs, y)));
  }
  r.add({"idempotence S S f = S f, 1000 points", idem <= 1e-9 ? Status::Pass : Status::Fail, idem, 1e-9, 0, "rel"});
  r.add({"fixed point S h = h for symmetric h", fixed <= 1e-9 ? Status::Pass : Status::Fail, fixed, 1e-9, 0, "rel"});
  r.add({"commutation S A+ = A+ S on symmetric input", comm <= 1e-9 ? Status::Pass : Status::Fail, comm, 1e-9, 0,
         "rel"});
  r.observed = std::max({idem, fixed, comm});
  r.expected = 1e-9;
  r.details = "two-photon Gaussian products with distinct widths and centers";
  return r;
}

CheckResult check_lower_bound_ingredients(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "lower_bound_ingredients";
  r.seed = cfg.seed;
  r.tolerance = "log-domain inequality; quadrature rel 1e-10";
  const double log2pi = std::log(kTwoPi);
  for (double p : {1.0, 2.0, std::exp(1.0), std::exp(2.0), 10.0, 1e3, 1e6, 1e12}) {
    const double lhs = log2pi + log_sub(2.0 * p, p);
    const double rhs = log2pi + p;
    r.add({"2pi(e^2p - e^p) >= 2pi e^p at p=" + fmt(p), lhs >= rhs ? Status::Pass : Status::Fail,
           std::exp(lhs - rhs), 1.0, 0.0, "margin factor >= 1"});
  }
  // Threshold where e^{2p} - e^p = e^p.
  double lo = 0.01, hi = 5.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (log_sub(2.0 * mid, mid) >= mid ? hi : lo) = mid;
  }
  r.add(rel_item("measured threshold p* = ln 2", hi, std::log(2.0), 1e-10));
  for (double p : {1.0, 2.0, std::exp(1.0)}) {
    const AdaptiveResult q =
        integrate_finite([](double k) { return 4.0 * kPi * k; }, std::exp(p / 2.0), std::exp(p), 1e-13);
    r.add(rel_item("shell integral of |k|^-1 at p=" + fmt(p), q.value, kTwoPi * (std::exp(2 * p) - std::exp(p)), 1e-10));
  }
  for (int i = 0; i <= 10; ++i) {
    const AdaptiveResult q = integrate_finite([](double k) { return 4.0 * kPi * k; }, i, i + 1.0, 1e-13);
    r.add(rel_item("annulus i=" + std::to_string(i) + " = 2pi(2i+1)", q.value, kTwoPi * (2 * i + 1), 1e-10));
  }
  const double eps3 = epsilon3_smallN(cfg.lower_bound_N, cfg.c3_max_index);
  const double c3 = (1.0 - std::sqrt(eps3)) * (1.0 - std::sqrt(eps3));
  r.add({"epsilon3 < 1 at N=" + std::to_string(cfg.lower_bound_N), eps3 < 1.0 ? Status::Pass : Status::Fail, eps3, 1.0,
         0.0, "< 1"});
  r.observed = c3;
  r.expected = 0.0;
  r.details = "threshold p* = " + fmt(hi) + "; C3 = (1 - sqrt(eps3))^2 = " + fmt(c3) + " with eps3 = " + fmt(eps3) +
              " over i in {0.." + std::to_string(cfg.c3_max_index) + "}^N";
  return r;
}

CheckResult check_density_limit(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "density_limit";
  r.seed = cfg.seed;
  r.tolerance = "tail norms decrease within 3 SE; total <= C2 |chi_m|^2 + 3 SE";
  const int m = 0;
  const MCOptions opt = mc(cfg, cfg.density_samples);
  const MCEstimate base = mc_norm_sq(make_base_chi(m, cfg.chi_R, cfg.chi_sigma),
                                     *gaussian_proposal(m, cfg.chi_sigma), derive_seed(cfg.seed, 1), opt);
  const double C2 = constant_C2(false);
  std::vector<MCEstimate> tails;
  std::string values;
  for (std::size_t i = 0; i < cfg.R_prime_factors.size(); ++i) {
    const double log_Rp = std::log(cfg.R_prime_factors[i] * cfg.chi_R);
    // Sector m+4 needs ln|k| beyond e^709 once R' >= 2, where it is zero by the overflow rule.
    const ChiSequence seq = build_chi_sequence(chi_spec(cfg, m, m + 2, DomainKind::Ball, log_Rp));
    ChiProposalSpec ps;
    ps.first_small = exterior(log_Rp);
    ps.integrate_last = true;
    const MCEstimate t = marginal_norm_sq(seq.state.sectors.at(m + 2), *chi_proposal(cfg, m, m + 2, ps),
                                    derive_seed(cfg.seed, 10 + i), opt);
    tails.push_back(t);
    values += (i ? ", " : "") + std::string("ln|chi-chi_m|^2(R'=") + fmt(cfg.R_prime_factors[i]) + "R) = " +
              fmt(t.log_abs());
    r.add(bound_item("|chi|^2 <= C2 |chi_m|^2 at R'=" + fmt(cfg.R_prime_factors[i]) + "R", combine({base, t}), C2,
                     base));
  }
  for (std::size_t i = 1; i < tails.size(); ++i)
    r.add(bound_item("tail decreases from R'=" + fmt(cfg.R_prime_factors[i - 1]) + "R to " +
                         fmt(cfg.R_prime_factors[i]) + "R",
                     tails[i], 1.0, tails[i - 1]));
  // R' = ∞: D = F_{m+1}, support of sector m+2 inside F_{m+2}.
  const ChiSequence inf = build_chi_sequence(chi_spec(cfg, m, m + 2, DomainKind::F));
  const ProposalPtr near = chi_proposal(cfg, m, m + 2, {});
  std::int64_t nonzero = 0, tested = 0;
  for (int t = 0; t < 200; ++t) {
    Stream rng(derive_seed(cfg.seed, 5000 + t));
    ConfigPoint x;
    if (!outside_point(rng, m + 2, *near, x)) continue;
    ++tested;
    nonzero += !evaluate_log(inf.state.sectors.at(m + 2), x).is_zero();
  }
  r.add({"R'=inf variant: chi_2 vanishes outside F_2, points=" + std::to_string(tested),
         nonzero == 0 ? Status::Pass : Status::Fail, static_cast<double>(nonzero), 0.0, 0.0, "== 0"});
  r.observed = tails.back().log_abs();
  r.expected = C2;
  r.details = values + "; C2 = " + fmt(C2) + "; sectors beyond m+2 lie past the double range for these R'";
  return r;
}

CheckResult check_constant_series(const VerifyConfig& cfg) {
  CheckResult r;
  r.name = "constant_series";
  r.seed = cfg.seed;
  r.tolerance = "forward and backward sums agree to rel 1e-10";
  const ConstantEstimates c = estimate_constants(cfg.lower_bound_N, cfg.c3_max_index);
  r.add(rel_item("C1 forward vs backward", c.C1_forward, c.C1_backward, 1e-10));
  r.add(rel_item("C2 forward vs backward", c.C2_forward, c.C2_backward, 1e-10));
  r.add({"C1, C2, C3 positive and finite",
         (c.C1 > 0 && c.C2 > 0 && c.C3_smallN > 0 && std::isfinite(c.C1) && std::isfinite(c.C2)) ? Status::Pass
                                                                                                  : Status::Fail,
         c.C3_smallN, 0.0, 0.0, "> 0"});
  r.observed = c.C1;
  r.expected = c.C2;
  r.details = "C1 = " + fmt(c.C1) + ", C2 = " + fmt(c.C2) + ", C3(N=" + std::to_string(c.C3_N) + ") = " +
              fmt(c.C3_smallN) + "; series terms " + std::to_string(c.series_terms);
  return r;
}

const std::vector<CheckEntry>& check_registry() {
  static const std::vector<CheckEntry> reg{
      {"radial_integrals", "integrals", [](const VerifyConfig&) { return check_radial_integrals(); }},
      {"set_lemma", "sets", check_set_lemma},
      {"fast_membership", "sets", check_fast_membership},
      {"chi_support", "chi", check_chi_support},
      {"cancellation", "cancellation", check_cancellation},
      {"norm_recursion", "norms", check_norm_recursion},
      {"A_minus_term_bounds", "norms", check_A_minus_term_bounds},
      {"cutoff_symmetry", "symmetry", check_cutoff_symmetry},
      {"full_symmetry_truncated", "symmetry", check_full_symmetry_truncated},
      {"symmetrizer", "symmetrizer", check_symmetrizer},
      {"lower_bound_ingredients", "lowerbound", check_lower_bound_ingredients},
      {"density_limit", "density", check_density_limit},
      {"constant_series", "constants", check_constant_series},
  };
  return reg;
}

CheckResult run_check(const CheckEntry& entry, const VerifyConfig& cfg) {
  VerifyConfig local = cfg;
  local.seed = derive_seed(cfg.seed, name_hash(entry.name));
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = entry.run(local);
  } catch (const inconclusive_error& e) {
    r.status = Status::Inconclusive;
    r.details = std::string("inconclusive: ") + e.what();
  } catch (const capability_error& e) {
    r.status = Status::Inconclusive;
    r.details = std::string("capability: ") + e.what();
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.details = std::string("error: ") + e.what();
  }
  r.name = entry.name;
  r.seed = local.seed;
  r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace fockcheck
