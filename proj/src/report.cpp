/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "fockcheck/report.hpp"

#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

namespace fockcheck {

using nlohmann::json;

namespace {

json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

Status Report::verdict() const {
  Status s = Status::Pass;
  for (const CheckResult& c : checks) s = worst(s, c.status);
  return s;
}

int Report::exit_code() const {
  switch (verdict()) {
    case Status::Pass: return kExitPass;
    case Status::Fail: return kExitFail;
    case Status::Inconclusive: return kExitInconclusive;
  }
  return kExitFail;
}

json config_to_json(const VerifyConfig& c) {
  return {{"seed", c.seed},
          {"threads", c.threads},
          {"set_lemma_n", c.set_lemma_n},
          {"set_trials", c.set_trials},
          {"membership_points", c.membership_points},
          {"support_points", c.support_points},
          {"cancellation_points", c.cancellation_points},
          {"chi_m", c.chi_m},
          {"chi_R", c.chi_R},
          {"chi_sigma", c.chi_sigma},
          {"R_prime_factors", c.R_prime_factors},
          {"norm_samples", c.norm_samples},
          {"bound_samples", c.bound_samples},
          {"bound_integral_samples", c.bound_integral_samples},
          {"pairing_samples", c.pairing_samples},
          {"pairing_integral_samples", c.pairing_integral_samples},
          {"symmetrizer_samples", c.symmetrizer_samples},
          {"density_samples", c.density_samples},
          {"cutoff_n", c.cutoff_n},
          {"cutoff_R", c.cutoff_R},
          {"cutoff_a", c.cutoff_a},
          {"quadrature",
           {{"radial_order", c.quad.radial_order},
            {"radial_panels", c.quad.radial_panels},
            {"angular_order", c.quad.angular_order},
            {"tolerance", c.quad.tolerance},
            {"truncation_radius", c.quad.truncation_radius}}},
          {"lower_bound_N", c.lower_bound_N},
          {"c3_max_index", c.c3_max_index}};
}

VerifyConfig config_from_json(const json& j, VerifyConfig c) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  const json known = config_to_json(c);
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw std::invalid_argument("unknown config key: " + key);
    (void)value;
  }
  read(j, "seed", c.seed);
  read(j, "threads", c.threads);
  read(j, "set_lemma_n", c.set_lemma_n);
  read(j, "set_trials", c.set_trials);
  read(j, "membership_points", c.membership_points);
  read(j, "support_points", c.support_points);
  read(j, "cancellation_points", c.cancellation_points);
  read(j, "chi_m", c.chi_m);
  read(j, "chi_R", c.chi_R);
  read(j, "chi_sigma", c.chi_sigma);
  read(j, "R_prime_factors", c.R_prime_factors);
  read(j, "norm_samples", c.norm_samples);
  read(j, "bound_samples", c.bound_samples);
  read(j, "bound_integral_samples", c.bound_integral_samples);
  read(j, "pairing_samples", c.pairing_samples);
  read(j, "pairing_integral_samples", c.pairing_integral_samples);
  read(j, "symmetrizer_samples", c.symmetrizer_samples);
  read(j, "density_samples", c.density_samples);
  read(j, "cutoff_n", c.cutoff_n);
  read(j, "cutoff_R", c.cutoff_R);
  read(j, "cutoff_a", c.cutoff_a);
  if (j.contains("quadrature")) {
    const json& q = j.at("quadrature");
    const json qk = known.at("quadrature");
    for (const auto& [key, value] : q.items()) {
      if (!qk.contains(key)) throw std::invalid_argument("unknown quadrature key: " + key);
      (void)value;
    }
    read(q, "radial_order", c.quad.radial_order);
    read(q, "radial_panels", c.quad.radial_panels);
    read(q, "angular_order", c.quad.angular_order);
    read(q, "tolerance", c.quad.tolerance);
    read(q, "truncation_radius", c.quad.truncation_radius);
  }
  read(j, "lower_bound_N", c.lower_bound_N);
  read(j, "c3_max_index", c.c3_max_index);
  c.validate();
  return c;
}

json report_to_json(const Report& r, bool include_volatile) {
  json checks = json::array();
  json runtimes = json::object();
  for (const CheckResult& c : r.checks) {
    json items = json::array();
    for (const CheckItem& it : c.items)
      items.push_back({{"label", it.label},
                       {"status", status_name(it.status)},
                       {"observed", num(it.observed)},
                       {"expected", num(it.expected)},
                       {"std_error", num(it.std_error)},
                       {"rule", it.rule}});
    checks.push_back({{"name", c.name},
                      {"status", status_name(c.status)},
                      {"observed", num(c.observed)},
                      {"expected", num(c.expected)},
                      {"std_error", num(c.std_error)},
                      {"tolerance", c.tolerance},
                      {"seed", c.seed},
                      {"details", c.details},
                      {"items", items}});
    runtimes[c.name] = c.runtime_s;
  }
  json out{{"version", "1.0.0"},
           {"config", config_to_json(r.config)},
           {"checks", checks},
           {"constants",
            {{"C1", num(r.constants.C1)},
             {"C2", num(r.constants.C2)},
             {"C3_smallN", num(r.constants.C3_smallN)},
             {"C3_N", r.constants.C3_N},
             {"epsilon3", num(r.constants.epsilon3)}}},
           {"verdict", status_name(r.verdict())},
           {"vacuous", r.vacuous()}};
  if (include_volatile) out["volatile"] = {{"runtime_s", runtimes}};
  return out;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os.precision(6);
  for (const CheckResult& c : r.checks) {
    os << (c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "INCONCLUSIVE") << "  "
       << c.name << "  observed=" << c.observed << " expected=" << c.expected << "  (" << c.tolerance
       << ", seed " << c.seed << ", " << c.runtime_s << " s)\n";
    for (const CheckItem& it : c.items) {
      os << "    [" << status_name(it.status) << "] " << it.label << ": " << it.observed << " vs " << it.expected;
      if (it.std_error > 0) os << " +- " << it.std_error;
      os << "\n";
    }
    if (!c.details.empty()) os << "    " << c.details << "\n";
  }
  os << "constants: C1=" << r.constants.C1 << " C2=" << r.constants.C2 << " C3(N=" << r.constants.C3_N
     << ")=" << r.constants.C3_smallN << "\n";
  os << "verdict: " << status_name(r.verdict()) << (r.vacuous() ? " (vacuous: no checks selected)" : "") << "\n";
  return os.str();
}

Report run_checks(const VerifyConfig& cfg, const std::vector<std::string>& groups, int workers) {
  cfg.validate();
  std::vector<const CheckEntry*> selected;
  for (const CheckEntry& e : check_registry()) {
    for (const std::string& g : groups) {
      if (g == "all" || g == e.group || g == e.name) {
        selected.push_back(&e);
        break;
      }
    }
  }
  Report rep;
  rep.config = cfg;
  rep.constants = estimate_constants(cfg.lower_bound_N, cfg.c3_max_index);
  rep.checks.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < selected.size();) rep.checks[i] = run_check(*selected[i], cfg);
  };
  const int w = std::max(1, std::min<int>(workers, static_cast<int>(selected.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < w; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  return rep;
}

}  // namespace fockcheck
