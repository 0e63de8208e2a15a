/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "fockcheck/verify.hpp"

namespace fockcheck {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitConfig = 64;
constexpr int kExitIO = 74;

struct Report {
  VerifyConfig config;
  std::vector<CheckResult> checks;  // registry order
  ConstantEstimates constants;

  Status verdict() const;
  // An empty selection passes vacuously and is flagged as such.
  bool vacuous() const { return checks.empty(); }
  int exit_code() const;
};

nlohmann::json config_to_json(const VerifyConfig& cfg);
// Unknown keys are rejected.
VerifyConfig config_from_json(const nlohmann::json& j, VerifyConfig base = {});

// Runtimes live under "volatile" so the rest is byte-identical for a fixed seed.
nlohmann::json report_to_json(const Report& r, bool include_volatile = true);
std::string report_to_text(const Report& r);

// Runs the registry entries whose group matches (or all for "all") on a worker pool;
// results keep registry order.
Report run_checks(const VerifyConfig& cfg, const std::vector<std::string>& groups, int workers = 1);

}  // namespace fockcheck
