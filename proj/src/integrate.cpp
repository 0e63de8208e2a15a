/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "fockcheck/integrate.hpp"

#include <exception>
#include <limits>
#include <thread>

namespace fockcheck {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Outside this window the mean is reported against an explicit log scale.
constexpr double kScaleWindow = 300.0;

double choose_scale(double M) { return (M > kScaleWindow || M < -kScaleWindow) ? M : 0.0; }

MCEstimate reduce(const std::vector<LogValue>& v) {
  MCEstimate e;
  e.n_samples = static_cast<std::int64_t>(v.size());
  if (v.size() < 2) throw std::invalid_argument("an estimate needs at least two samples");
  double M = kNegInf;
  for (const LogValue& x : v)
    if (!x.is_zero()) M = std::max(M, x.scale);
  if (M == kNegInf) return e;
  e.log_scale = choose_scale(M);
  const std::size_t n = v.size();
  std::vector<double> re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> m = v[i].is_zero() ? std::complex<double>{} : v[i].phase * std::exp(v[i].scale - e.log_scale);
    re[i] = m.real();
    im[i] = m.imag();
  }
  e.mean = {pairwise_sum(re) / n, pairwise_sum(im) / n};
  std::vector<double> dev(n);
  for (std::size_t i = 0; i < n; ++i) dev[i] = std::norm(std::complex<double>{re[i], im[i]} - e.mean);
  e.std_error = std::sqrt(pairwise_sum(dev) / static_cast<double>(n - 1) / static_cast<double>(n));
  return e;
}

template <class Fn>
void parallel_for(std::int64_t n, int threads, Fn fn) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::int64_t>(n, 64))));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::int64_t i = n * t / threads; i < n * (t + 1) / threads; ++i) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

double MCEstimate::log_abs() const {
  const double a = std::abs(mean);
  return a == 0.0 ? kNegInf : std::log(a) + log_scale;
}

double MCEstimate::log_error() const { return std_error == 0.0 ? kNegInf : std::log(std_error) + log_scale; }

MCEstimate combine(const std::vector<MCEstimate>& parts) {
  MCEstimate r;
  double M = kNegInf;
  for (const MCEstimate& p : parts) {
    M = std::max({M, p.log_abs(), p.log_error()});
    r.n_samples += p.n_samples;
  }
  if (M == kNegInf) return r;
  r.log_scale = choose_scale(M);
  double var = 0.0;
  for (const MCEstimate& p : parts) {
    const double f = std::exp(p.log_scale - r.log_scale);
    r.mean += p.mean * f;
    var += (p.std_error * f) * (p.std_error * f);
  }
  r.std_error = std::sqrt(var);
  return r;
}

MCEstimate mc_inner(const SectorFunction& f, const SectorFunction& g, const Proposal& q,
                    std::uint64_t seed, const MCOptions& opt) {
  if (f.sector != g.sector || q.sector() != f.sector) throw std::invalid_argument("sector mismatch in mc_inner");
  const bool same = &f == &g;
  std::vector<LogValue> v(opt.n_samples);
  parallel_for(opt.n_samples, opt.threads, [&](std::int64_t i) {
    Stream rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const ConfigPoint x = q.sample(rng);
    const LogValue fv = evaluate_log(f, x);
    if (fv.is_zero()) return;
    const LogValue gv = same ? fv : evaluate_log(g, x);
    if (!fv.is_finite() || !gv.is_finite()) throw inconclusive_error("integrand is not finite at a sample");
    const LogValue prod = fv.conj() * gv;
    if (prod.is_zero()) return;
    const double lq = q.log_density(x);
    if (!(lq > kNegInf) || !std::isfinite(lq)) throw inconclusive_error("proposal does not cover the integrand");
    v[i] = prod * LogValue::exp_of(-lq);
  });
  return reduce(v);
}

MCEstimate mc_weighted_norm_sq(const SectorFunction& f, const std::function<double(const ConfigPoint&)>& log_weight,
                               const Proposal& q, std::uint64_t seed, const MCOptions& opt) {
  if (q.sector() != f.sector) throw std::invalid_argument("sector mismatch in mc_weighted_norm_sq");
  std::vector<LogValue> v(opt.n_samples);
  parallel_for(opt.n_samples, opt.threads, [&](std::int64_t i) {
    Stream rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const ConfigPoint x = q.sample(rng);
    const LogValue fv = evaluate_log(f, x);
    if (fv.is_zero()) return;
    if (!fv.is_finite()) throw inconclusive_error("integrand is not finite at a sample");
    const double lw = log_weight(x);
    if (lw == kNegInf) return;
    const double lq = q.log_density(x);
    if (!(lq > kNegInf) || !std::isfinite(lq) || std::isnan(lw))
      throw inconclusive_error("proposal does not cover the integrand");
    v[i] = LogValue::exp_of(2.0 * fv.log_abs() + lw - lq);
  });
  MCEstimate e = reduce(v);
  e.mean = {e.mean.real(), 0.0};
  return e;
}

MCEstimate mc_norm_sq(const SectorFunction& f, const Proposal& q, std::uint64_t seed, const MCOptions& opt) {
  MCEstimate e = mc_inner(f, f, q, seed, opt);
  e.mean = {e.mean.real(), 0.0};
  return e;
}

MCEstimate fock_norm_sq(const FockState& psi, const std::map<int, ProposalPtr>& proposals,
                        std::uint64_t seed, const MCOptions& opt) {
  std::vector<MCEstimate> parts;
  for (const auto& [n, f] : psi.sectors) {
    if (f.empty()) continue;
    const auto it = proposals.find(n);
    if (it == proposals.end()) throw std::invalid_argument("no proposal for a populated sector");
    parts.push_back(mc_norm_sq(f, *it->second, derive_seed(seed, static_cast<std::uint64_t>(n)), opt));
  }
  return combine(parts);
}

double closed_shell_integral(double p) {
  if (!std::isfinite(p)) throw std::invalid_argument("shell integral of an overflowed p_n");
  if (p < 0.0) throw std::invalid_argument("shell integral needs p >= 0");
  return kTwoPi * p;
}

AdaptiveResult shell_integral_quadrature(double p, double rel_tol) {
  if (p <= 40.0) {
    // In r directly while e^p stays moderate.
    return integrate_finite([](double r) { return 4.0 * kPi / r; }, std::exp(p / 2.0), std::exp(p), rel_tol);
  }
  return integrate_finite([](double) { return 4.0 * kPi; }, p / 2.0, p, rel_tol);
}

std::vector<ReferenceIntegral> reference_radial_integrals(double rel_tol) {
  std::vector<ReferenceIntegral> out;
  const AdaptiveResult a = integrate_upper([](double r) { return 4.0 * kPi / (r * r * r); }, 1.0, rel_tol);
  out.push_back({"k^-5 outside unit ball", kTwoPi, a.value, a.abs_error, a.converged, false});
  const AdaptiveResult b =
      integrate_upper([](double r) { return 4.0 * kPi * r / std::pow(r * r + 1.0, 4); }, 0.0, rel_tol);
  out.push_back({"(k^2+1)^-4 k^-1", kTwoPi / 3.0, b.value, b.abs_error, b.converged, false});
  const AdaptiveResult c = integrate_upper([](double r) { return 4.0 * kPi / std::pow(r * r + 1.0, 4); }, 0.0, rel_tol);
  out.push_back({"(k^2+1)^-4 k^-2", 5.0 * kPi, c.value, c.abs_error, c.converged, true});
  return out;
}

}  // namespace fockcheck
