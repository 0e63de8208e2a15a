/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "fockcheck/report.hpp"

using namespace fockcheck;

namespace {

const std::vector<std::string> kGroups{"all",      "integrals", "sets",     "chi",        "cancellation",
                                       "norms",    "symmetry",  "symmetrizer", "lowerbound", "density",
                                       "constants", "none"};

struct Options {
  std::uint64_t seed = 42;
  bool seed_set = false;
  int threads = 1;
  int jobs = 1;
  std::string config_path;
  std::string output;
  std::string format = "text";
  std::vector<int> n;
  std::int64_t trials = 0;
  std::vector<std::string> groups;
};

VerifyConfig make_config(const Options& o) {
  VerifyConfig cfg;
  if (const char* env = std::getenv("FOCKCHECK_SEED")) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("FOCKCHECK_SEED is not an unsigned integer: ") + env);
    }
  }
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw std::ios_base::failure("cannot read config file " + o.config_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
    try {
      cfg = config_from_json(j, cfg);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
  }
  if (o.seed_set) cfg.seed = o.seed;
  cfg.threads = o.threads;
  if (!o.n.empty()) cfg.set_lemma_n = o.n;
  if (o.trials > 0) {
    cfg.set_trials = o.trials;
    cfg.membership_points = std::min<std::int64_t>(o.trials, cfg.membership_points);
  }
  cfg.validate();
  return cfg;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::ios_base::failure("write to " + path + " failed");
}

std::string render(const Report& r, const std::string& format) {
  return format == "json" ? report_to_json(r).dump(2) + "\n" : report_to_text(r);
}

int run(int argc, char** argv) {
  CLI::App app{"fockcheck: numerical verification of Fock-space operator lemmas"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "master seed (default 42 or FOCKCHECK_SEED)")
        ->each([&](const std::string&) { o.seed_set = true; });
    sub->add_option("--threads", o.threads, "Monte Carlo threads per check")->check(CLI::Range(1, 1024));
    sub->add_option("--jobs", o.jobs, "checks run concurrently")->check(CLI::Range(1, 64));
    sub->add_option("--config", o.config_path, "JSON config file; unknown keys are rejected");
    sub->add_option("--output", o.output, "write the report here instead of stdout");
    sub->add_option("--n", o.n, "set lemma sectors");
    sub->add_option("--trials", o.trials, "set lemma trials")->check(CLI::PositiveNumber);
  };
  CLI::App* verify = app.add_subcommand("verify", "run a check group and print the report");
  add_common(verify);
  verify->add_option("group", o.groups, "check group")->required()->check(CLI::IsMember(kGroups));
  verify->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  CLI::App* report = app.add_subcommand("report", "run checks and emit the report");
  add_common(report);
  report->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  report->add_option("group", o.groups, "check groups (default all)")->check(CLI::IsMember(kGroups));
  CLI::App* constants = app.add_subcommand("constants", "print C1, C2 and the small-N C3");
  add_common(constants);
  constants->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  VerifyConfig cfg;
  try {
    cfg = make_config(o);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "fockcheck: " << e.what() << "\n";
    return kExitIO;
  } catch (const std::exception& e) {
    std::cerr << "fockcheck: config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (*constants) {
      const ConstantEstimates c = estimate_constants(cfg.lower_bound_N, cfg.c3_max_index);
      std::ostringstream os;
      os.precision(17);
      if (o.format == "json") {
        nlohmann::json j{{"C1", c.C1}, {"C1_backward", c.C1_backward}, {"C2", c.C2},
                         {"C2_backward", c.C2_backward}, {"C3_smallN", c.C3_smallN}, {"C3_N", c.C3_N},
                         {"epsilon3", c.epsilon3}, {"series_terms", c.series_terms}};
        os << j.dump(2) << "\n";
      } else {
        os << "C1 = " << c.C1 << " (backward " << c.C1_backward << ")\n"
           << "C2 = " << c.C2 << " (backward " << c.C2_backward << ")\n"
           << "C3(N=" << c.C3_N << ") = " << c.C3_smallN << " with epsilon3 = " << c.epsilon3 << "\n";
      }
      emit(os.str(), o.output);
      return kExitPass;
    }
    if (o.groups.empty()) o.groups = {"all"};
    const Report r = run_checks(cfg, o.groups, o.jobs);
    emit(render(r, o.format), o.output);
    return r.exit_code();
  } catch (const std::ios_base::failure& e) {
    std::cerr << "fockcheck: " << e.what() << "\n";
    return kExitIO;
  } catch (const std::invalid_argument& e) {
    std::cerr << "fockcheck: config error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
