/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "fockcheck/proposals.hpp"

#include <limits>
#include <numeric>

#include "fockcheck/sets.hpp"

namespace fockcheck {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLog2Pi = std::log(kTwoPi);

// ln|x|² without overflow.
double log_sq(const Coord& c) {
  const double L = log_norm(c);
  return L == kNegInf ? kNegInf : 2.0 * L;
}

double gaussian_log_density(const Coord& c, double sigma) {
  const double ls = log_sq(c);
  const double q = ls == kNegInf ? 0.0 : std::exp(ls - 2.0 * std::log(sigma));
  return -1.5 * (kLog2Pi + 2.0 * std::log(sigma)) - 0.5 * q;
}

MomentumVector gaussian_vector(Stream& rng, double sigma) {
  const double x = rng.normal(), y = rng.normal(), z = rng.normal();
  return MomentumVector{x, y, z} * sigma;
}

class GaussianProposal final : public Proposal {
 public:
  GaussianProposal(int sector, double sigma) : sector_(sector), sigma_(sigma) {}
  int sector() const override { return sector_; }
  ConfigPoint sample(Stream& rng) const override {
    std::vector<Coord> k;
    for (int i = 0; i < sector_; ++i) k.push_back(Coord::linear(gaussian_vector(rng, sigma_)));
    const MomentumVector p = gaussian_vector(rng, sigma_);
    return ConfigPoint::make(std::move(k), p);
  }
  double log_density(const ConfigPoint& x) const override {
    double s = 0.0;
    for (const Coord& c : x.photons) s += gaussian_log_density(c, sigma_);
    return s + gaussian_log_density(apply_map(AffineCoordMap::fermion(sector_), x), sigma_);
  }

 private:
  int sector_;
  double sigma_;
};

class MixtureProposal final : public Proposal {
 public:
  MixtureProposal(std::vector<ProposalPtr> parts, std::vector<double> weights)
      : parts_(std::move(parts)), weights_(std::move(weights)) {
    if (parts_.empty()) throw std::invalid_argument("mixture needs at least one component");
    if (weights_.empty()) weights_.assign(parts_.size(), 1.0);
    if (weights_.size() != parts_.size()) throw std::invalid_argument("mixture weight count mismatch");
    const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    for (const ProposalPtr& p : parts_)
      if (p->sector() != parts_[0]->sector()) throw std::invalid_argument("mixture components differ in sector");
    for (double& w : weights_) {
      if (!(w > 0.0)) throw std::invalid_argument("mixture weights must be positive");
      w /= total;
    }
  }
  int sector() const override { return parts_[0]->sector(); }
  ConfigPoint sample(Stream& rng) const override {
    double u = rng.uniform();
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
      if (u < weights_[i]) return parts_[i]->sample(rng);
      u -= weights_[i];
    }
    return parts_.back()->sample(rng);
  }
  double log_density(const ConfigPoint& x) const override {
    double s = kNegInf;
    for (std::size_t i = 0; i < parts_.size(); ++i) s = log_add(s, std::log(weights_[i]) + parts_[i]->log_density(x));
    return s;
  }

 private:
  std::vector<ProposalPtr> parts_;
  std::vector<double> weights_;
};

// Point of the inner sector: photons at `keep`, fermion shifted by the dropped slots in `add`.
ConfigPoint strip(const ConfigPoint& x, const std::vector<int>& keep, const std::vector<int>& add) {
  ConfigPoint y;
  y.fermion_base = x.fermion_base;
  for (int s : keep) {
    y.photons.push_back(x.photons[s]);
    y.fermion_coef.push_back(x.fermion_coef[s]);
  }
  for (int s = 0; s < x.sector(); ++s) {
    if (std::find(keep.begin(), keep.end(), s) != keep.end()) continue;
    const int c = x.fermion_coef[s] + static_cast<int>(std::count(add.begin(), add.end(), s));
    if (c != 0) y.fermion_extra.emplace_back(c, x.photons[s]);
  }
  y.fermion_extra.insert(y.fermion_extra.end(), x.fermion_extra.begin(), x.fermion_extra.end());
  return y;
}

class ChiStepProposal final : public Proposal {
 public:
  explicit ChiStepProposal(ChiStep step) : s_(std::move(step)) {
    if (!s_.inner) throw std::invalid_argument("chi step needs an inner proposal");
    sector_ = s_.inner->sector() + 1 + (s_.small_slot >= 0 ? 1 : 0);
    if (s_.small_slot >= sector_ - 1) throw std::invalid_argument("small photon slot out of range");
    if (s_.unbounded && !(s_.shell_power < -3.0))
      throw std::invalid_argument("unbounded shell needs a power below -3");
    for (int i = 0; i < sector_ - 1; ++i)
      if (i != s_.small_slot) filled_.push_back(i);
  }
  int sector() const override { return sector_; }

  ConfigPoint sample(Stream& rng) const override {
    const ConfigPoint y = s_.inner->sample(rng);
    ConfigPoint x;
    x.photons.resize(sector_);
    x.fermion_coef.assign(sector_, 0);
    x.fermion_base = y.fermion_base;
    x.fermion_extra = y.fermion_extra;
    for (std::size_t i = 0; i < filled_.size(); ++i) {
      x.photons[filled_[i]] = y.photons[i];
      x.fermion_coef[filled_[i]] = y.fermion_coef[i];
    }
    double logP = log_P(x);
    if (s_.small_slot >= 0) {
      x.photons[s_.small_slot] = sample_small(rng, logP);
      x.fermion_coef[s_.small_slot] -= 1;
      logP += 2.0 * log_sq_plus_one(x.photons[s_.small_slot]);
    }
    if (s_.integrate_last) {
      x.photons[sector_ - 1] = Coord::linear({});
      x.fermion_coef[sector_ - 1] -= 1;
      return x;
    }
    if (logP > 709.0) {
      // p_n overflows, so every target built on E_n vanishes here; the sample carries no weight.
      x.photons[sector_ - 1] = Coord::radial(uniform_direction(rng), std::numeric_limits<double>::infinity());
      x.fermion_coef[sector_ - 1] -= 1;
      return x;
    }
    const double P = std::exp(logP);
    const ShellDraw d = sample_power_shell(rng, P / 2.0, s_.unbounded ? std::numeric_limits<double>::infinity() : P,
                                           s_.shell_power);
    x.photons[sector_ - 1] = Coord::radial(d.k);
    x.fermion_coef[sector_ - 1] -= 1;
    return x;
  }

  double log_density(const ConfigPoint& x) const override {
    if (x.sector() != sector_) return kNegInf;
    double logP = log_P(x);
    double s = 0.0;
    std::vector<int> add{sector_ - 1};
    if (s_.small_slot >= 0) {
      const Coord& k = x.photons[s_.small_slot];
      s += small_log_density(k, logP);
      logP += 2.0 * log_sq_plus_one(k);
      add.push_back(s_.small_slot);
    }
    if (s == kNegInf) return kNegInf;
    if (s_.integrate_last) return s + s_.inner->log_density(strip(x, filled_, add));
    if (logP > 709.0) return kNegInf;
    const double P = std::exp(logP);
    s += power_shell_log_density(log_norm(x.photons[sector_ - 1]), P / 2.0,
                                 s_.unbounded ? std::numeric_limits<double>::infinity() : P, s_.shell_power);
    if (s == kNegInf) return s;
    return s + s_.inner->log_density(strip(x, filled_, add));
  }

 private:
  double log_P(const ConfigPoint& x) const {
    double l = s_.shell_n;
    for (int i : filled_) l += 2.0 * log_sq_plus_one(x.photons[i]);
    return l;
  }

  // Exterior rate: derivative of p_n(r) = P (1 + r²)² at the ball edge.
  double exterior_rate(double logP) const {
    const double R = std::exp(s_.small.log_radius);
    return 4.0 * std::exp(logP) * R * (1.0 + R * R);
  }

  Coord sample_small(Stream& rng, double logP) const {
    if (rng.uniform() < s_.small.broad_weight) return Coord::linear(gaussian_vector(rng, 1.0));
    const MomentumVector dir = uniform_direction(rng);
    switch (s_.small.kind) {
      case SmallPhoton::Kind::Rayleigh: {
        // Radii below e^-300 stay in log form so |k| never underflows to zero.
        const double L = -0.5 * (std::log(4.0) + logP) + 0.5 * std::log(-2.0 * std::log(rng.uniform()));
        return L < -kLinearLogLimit ? Coord::radial(dir, L) : Coord::linear(dir * std::exp(L));
      }
      case SmallPhoton::Kind::Exterior: {
        const double R = std::exp(s_.small.log_radius);
        return Coord::linear(dir * (R - std::log(rng.uniform()) / exterior_rate(logP)));
      }
      case SmallPhoton::Kind::Gaussian:
        break;
    }
    return Coord::linear(gaussian_vector(rng, s_.small.sigma));
  }

  double small_log_density(const Coord& k, double logP) const {
    const double L = log_norm(k);
    double main = kNegInf;
    switch (s_.small.kind) {
      case SmallPhoton::Kind::Rayleigh: {
        // e^{-r²/2s²} / (4π s² r) with s² = 1/(4P).
        const double log_s2 = -(std::log(4.0) + logP);
        if (L != kNegInf) main = -std::exp(2.0 * L - log_s2) / 2.0 - kLog4Pi - log_s2 - L;
        break;
      }
      case SmallPhoton::Kind::Exterior: {
        const double R = std::exp(s_.small.log_radius);
        const double r = std::exp(L);
        if (r >= R) {
          const double rate = exterior_rate(logP);
          main = std::log(rate) - rate * (r - R) - kLog4Pi - 2.0 * L;
        }
        break;
      }
      case SmallPhoton::Kind::Gaussian:
        main = gaussian_log_density(k, s_.small.sigma);
        break;
    }
    const double w = s_.small.broad_weight;
    double s = w < 1.0 ? std::log1p(-w) + main : kNegInf;
    if (w > 0.0) s = log_add(s, std::log(w) + gaussian_log_density(k, 1.0));
    return s;
  }

  ChiStep s_;
  int sector_ = 0;
  std::vector<int> filled_;
};

}  // namespace

ProposalPtr gaussian_proposal(int sector, double sigma) {
  if (sector < 0 || !(sigma > 0.0)) throw std::invalid_argument("invalid Gaussian proposal");
  return std::make_shared<GaussianProposal>(sector, sigma);
}

ProposalPtr mixture(std::vector<ProposalPtr> parts, std::vector<double> weights) {
  if (parts.size() == 1) return parts[0];
  return std::make_shared<MixtureProposal>(std::move(parts), std::move(weights));
}

ProposalPtr chi_step_proposal(ChiStep step) { return std::make_shared<ChiStepProposal>(std::move(step)); }

}  // namespace fockcheck
