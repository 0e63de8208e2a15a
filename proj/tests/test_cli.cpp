/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const char* cli = std::getenv("FOCKCHECK_CLI");
  REQUIRE(cli != nullptr);
  const std::string cmd = env + " " + cli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string stable(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  j.erase("volatile");
  return j.dump();
}

}  // namespace

TEST_CASE("verify integrals passes") { CHECK(run("verify integrals").code == 0); }

TEST_CASE("unknown flags and groups exit 64") {
  CHECK(run("verify integrals --bogus").code == 64);
  CHECK(run("verify nonsense").code == 64);
  CHECK(run("").code == 64);
}

TEST_CASE("set runs are deterministic") {
  const std::string args = "verify sets --n 3 --trials 100000 --seed 42 --format json";
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(stable(a.out) == stable(b.out));
  const nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j["config"]["seed"] == 42);
  CHECK(j["config"]["set_trials"] == 100000);
}

TEST_CASE("the environment seed is the default and the flag overrides it") {
  const nlohmann::json a = nlohmann::json::parse(run("verify constants --format json", "FOCKCHECK_SEED=5").out);
  CHECK(a["config"]["seed"] == 5);
  const nlohmann::json b =
      nlohmann::json::parse(run("verify constants --format json --seed 6", "FOCKCHECK_SEED=5").out);
  CHECK(b["config"]["seed"] == 6);
  CHECK(run("verify constants", "FOCKCHECK_SEED=abc").code == 64);
}

TEST_CASE("config files are validated") {
  const std::string bad = "cli_bad_config.json", good = "cli_good_config.json", broken = "cli_broken.json";
  std::ofstream(bad) << R"({"seed": 1, "mystery": 2})";
  std::ofstream(good) << R"({"seed": 3, "set_trials": 1000})";
  std::ofstream(broken) << "{ not json";
  CHECK(run("verify constants --config " + bad).code == 64);
  CHECK(run("verify constants --config " + broken).code == 64);
  const Run ok = run("report constants --format json --config " + good);
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["config"]["set_trials"] == 1000);
  CHECK(run("verify constants --config /nonexistent/cfg.json").code == 74);
}

TEST_CASE("unwritable output exits 74") {
  CHECK(run("verify constants --output /nonexistent/dir/report.json").code == 74);
}

TEST_CASE("empty selection is a flagged vacuous pass") {
  const Run r = run("report none --format json");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["checks"].empty());
  CHECK(j["vacuous"] == true);
  CHECK(j["verdict"] == "pass");
}

TEST_CASE("constants subcommand prints the series values") {
  const Run r = run("constants --format json");
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["C1"].get<double>() == doctest::Approx(557.5699067457));
  CHECK(j["C2"].get<double>() == doctest::Approx(2.5228646538));
}
