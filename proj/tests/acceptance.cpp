/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
// Runs the full registry twice with the default config and prints one line per
// acceptance criterion. Exit status is nonzero if any criterion fails.
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "fockcheck/report.hpp"

using namespace fockcheck;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> checks;
  double max_runtime_s;  // 0 means no limit
};

const CheckResult* find(const Report& r, const std::string& name) {
  for (const CheckResult& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

int failures = 0;

void line(int id, const std::string& title, bool ok, const std::string& why) {
  std::printf("%s  criterion %2d  %s%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), why.empty() ? "" : "  ",
              why.c_str());
  if (!ok) ++failures;
}

}  // namespace

int main() {
  const VerifyConfig cfg;
  const Report first = run_checks(cfg, {"all"});
  const std::vector<Criterion> criteria{
      {1, "closed-form radial integrals", {"radial_integrals"}, 1.0},
      {2, "set lemma disjointness with mutation power", {"set_lemma"}, 30.0},
      {3, "fast F_n membership equals brute force", {"fast_membership"}, 10.0},
      {4, "chi support outside F_n", {"chi_support"}, 10.0},
      {5, "closed-shell cancellation identity", {"cancellation"}, 10.0},
      {6, "norm recursion bound", {"norm_recursion"}, 120.0},
      {7, "cutoff symmetry pairing", {"cutoff_symmetry"}, 60.0},
      {8, "symmetrizer suite", {"symmetrizer"}, 30.0},
      {9, "lower-bound ingredients", {"lower_bound_ingredients"}, 1.0},
      {10, "constant series agree across summation orders", {"constant_series"}, 0.0},
  };
  for (const Criterion& c : criteria) {
    bool ok = true;
    std::string why;
    for (const std::string& name : c.checks) {
      const CheckResult* r = find(first, name);
      if (!r) {
        ok = false;
        why += name + " missing; ";
        continue;
      }
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s=%s in %.2f s", name.c_str(), status_name(r->status), r->runtime_s);
      why += buf;
      if (r->status != Status::Pass) ok = false;
      if (c.max_runtime_s > 0 && r->runtime_s >= c.max_runtime_s) {
        ok = false;
        why += " (over time budget)";
      }
    }
    if (c.id == 2) {
      const bool sizes = cfg.set_trials >= 100000 && cfg.set_lemma_n == std::vector<int>{3, 4};
      if (!sizes) ok = false, why += " (config below required trials)";
    }
    if (c.id == 6 && cfg.norm_samples < 100000) ok = false, why += " (fewer than 1e5 samples per sector)";
    if (c.id == 10) {
      const ConstantEstimates& k = first.constants;
      const bool reported = k.C1 > 0 && k.C2 > 0 && k.C3_smallN > 0;
      const bool agree = std::abs(k.C1_forward - k.C1_backward) <= 1e-10 * std::abs(k.C1_forward) &&
                         std::abs(k.C2_forward - k.C2_backward) <= 1e-10 * std::abs(k.C2_forward);
      char buf[200];
      std::snprintf(buf, sizeof buf, "; C1=%.15g C2=%.15g C3(N=%d)=%.6g", k.C1, k.C2, k.C3_N, k.C3_smallN);
      why += buf;
      if (!reported || !agree) ok = false;
    }
    line(c.id, c.title, ok, why);
  }

  const Report second = run_checks(cfg, {"all"});
  const std::string a = report_to_json(first, false).dump();
  const std::string b = report_to_json(second, false).dump();
  line(11, "two full runs give byte-identical non-volatile reports", a == b,
       a == b ? std::to_string(a.size()) + " bytes" : "reports differ");

  std::printf("overall verdict of the first run: %s\n", status_name(first.verdict()));
  return failures == 0 ? 0 : 1;
}
