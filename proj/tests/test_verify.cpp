/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <doctest.h>

#include <set>

#include "fockcheck/report.hpp"

using namespace fockcheck;

TEST_CASE("registry names are unique and in declared order") {
  const std::vector<CheckEntry>& reg = check_registry();
  REQUIRE(reg.size() == 13);
  CHECK(reg.front().name == "radial_integrals");
  CHECK(reg.back().name == "constant_series");
  std::set<std::string> names;
  for (const CheckEntry& e : reg) names.insert(e.name);
  CHECK(names.size() == reg.size());
}

TEST_CASE("worst status ordering") {
  CHECK(worst(Status::Pass, Status::Inconclusive) == Status::Inconclusive);
  CHECK(worst(Status::Inconclusive, Status::Fail) == Status::Fail);
  CHECK(worst(Status::Pass, Status::Pass) == Status::Pass);
}

TEST_CASE("constants match independent high-precision sums") {
  // Frozen from a 30-digit evaluation of the product series.
  CHECK(constant_C1(false) == doctest::Approx(557.569906745695924787772563383).epsilon(1e-12));
  CHECK(constant_C2(false) == doctest::Approx(2.52286465377700080292043667788).epsilon(1e-12));
  CHECK(constant_C1(true) == doctest::Approx(constant_C1(false)).epsilon(1e-14));
  const ConstantEstimates c = estimate_constants(1, 30);
  CHECK(c.epsilon3 > 0.0);
  CHECK(c.epsilon3 < 1.0);
  CHECK(c.C3_smallN == doctest::Approx((1 - std::sqrt(c.epsilon3)) * (1 - std::sqrt(c.epsilon3))));
}

TEST_CASE("config validation rejects bad values") {
  VerifyConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.set_trials = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = VerifyConfig{};
  cfg.R_prime_factors = {5.0, 2.0};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(nlohmann::json{{"no_such_key", 1}}), std::invalid_argument);
  CHECK(config_from_json(nlohmann::json{{"seed", 7}}).seed == 7);
}

TEST_CASE("config echo round-trips") {
  VerifyConfig cfg;
  cfg.seed = 99;
  cfg.cutoff_R = {3.0};
  const VerifyConfig back = config_from_json(config_to_json(cfg));
  CHECK(config_to_json(back) == config_to_json(cfg));
}

TEST_CASE("fast checks pass") {
  VerifyConfig cfg;
  cfg.set_trials = 5000;
  cfg.membership_points = 1000;
  for (const char* group : {"integrals", "sets", "chi", "cancellation", "lowerbound", "constants"}) {
    const Report r = run_checks(cfg, {group});
    REQUIRE_FALSE(r.checks.empty());
    for (const CheckResult& c : r.checks) {
      INFO(c.name << ": " << c.details);
      CHECK(c.status == Status::Pass);
    }
  }
}

TEST_CASE("an empty selection passes vacuously") {
  const Report r = run_checks(VerifyConfig{}, {"none"});
  CHECK(r.checks.empty());
  CHECK(r.vacuous());
  CHECK(r.exit_code() == kExitPass);
  CHECK(report_to_json(r)["vacuous"] == true);
}

TEST_CASE("exceptions inside a check map to statuses") {
  const CheckEntry boom{"boom", "x", [](const VerifyConfig&) -> CheckResult { throw std::runtime_error("bad"); }};
  CHECK(run_check(boom, VerifyConfig{}).status == Status::Fail);
  const CheckEntry unsure{"unsure", "x",
                          [](const VerifyConfig&) -> CheckResult { throw inconclusive_error("no power"); }};
  CHECK(run_check(unsure, VerifyConfig{}).status == Status::Inconclusive);
}

TEST_CASE("report JSON round-trips numbers bit-exactly") {
  VerifyConfig cfg;
  cfg.set_trials = 2000;
  cfg.membership_points = 500;
  const Report r = run_checks(cfg, {"integrals", "sets", "constants"});
  const nlohmann::json j = nlohmann::json::parse(report_to_json(r).dump());
  REQUIRE(j["checks"].size() == r.checks.size());
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    CHECK(j["checks"][i]["observed"].get<double>() == r.checks[i].observed);
    for (std::size_t k = 0; k < r.checks[i].items.size(); ++k)
      CHECK(j["checks"][i]["items"][k]["observed"].get<double>() == r.checks[i].items[k].observed);
  }
  CHECK(j["constants"]["C1"].get<double>() == r.constants.C1);
}
