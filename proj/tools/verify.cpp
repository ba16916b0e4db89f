// verify: run a named suite and report per-check results.
//
//   verify list
//   verify <suite> [--config PATH] [--set key=value ...] [--out PATH] [--json] [--no-timing]
//   verify all [--parallel] ...
//
// Exit status is 0 iff every check passes, 1 on a failed check, 2 on usage or config errors.

#include "cocycle/error.hpp"
#include "cocycle/suites.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>

namespace {

using cocycle::SuiteConfig;
using cocycle::SuiteReport;

int emit(const std::vector<SuiteReport>& reports, bool json, const std::string& out_path) {
  std::string text;
  bool pass = true;
  if (json) {
    if (reports.size() == 1) {
      text = cocycle::to_json(reports.front()) + "\n";
    } else {
      text = "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i) text += cocycle::to_json(reports[i]) + (i + 1 < reports.size() ? ",\n" : "\n");
      text += "]\n";
    }
  } else {
    for (const auto& r : reports) text += cocycle::to_text(r);
  }
  for (const auto& r : reports) pass = pass && r.pass;
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "verify: cannot write " << out_path << "\n";
      return 2;
    }
    f << text;
    for (const auto& r : reports) std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run verification suites"};
  app.require_subcommand(0, 1);

  std::string suite;
  std::string config_path;
  std::string out_path;
  std::vector<std::string> overrides;
  bool json = false;
  bool no_timing = false;
  bool parallel = false;

  app.add_option("suite", suite, "suite name, 'all', or 'list'");
  app.add_option("--config", config_path, "flat key = value configuration file");
  app.add_option("--set", overrides, "override one configuration key (key=value)");
  app.add_option("--out", out_path, "write the report to this file");
  app.add_flag("--json", json, "emit the JSON report");
  app.add_flag("--no-timing", no_timing, "report 0 ms so that reports are byte-identical");
  app.add_flag("--parallel", parallel, "run suites concurrently (with 'all')");

  CLI11_PARSE(app, argc, argv);

  if (suite.empty() || suite == "list") {
    for (const auto& [name, desc] : cocycle::list_suites()) std::printf("%-20s %s\n", name.c_str(), desc.c_str());
    return 0;
  }

  try {
    SuiteConfig cfg = config_path.empty() ? SuiteConfig{} : SuiteConfig::load(config_path);
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw cocycle::Error(cocycle::ErrorCode::ConfigParse, "--set expects key=value");
      cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (no_timing) cfg.timing = false;

    std::vector<std::string> names;
    if (suite == "all") {
      for (const auto& entry : cocycle::list_suites()) names.push_back(entry.first);
    } else {
      names.push_back(suite);
    }

    std::vector<SuiteReport> reports;
    if (parallel && names.size() > 1) {
      std::vector<std::future<SuiteReport>> jobs;
      for (const auto& n : names) jobs.push_back(std::async(std::launch::async, [n, &cfg] { return cocycle::run_suite(n, cfg); }));
      for (auto& j : jobs) reports.push_back(j.get());
    } else {
      for (const auto& n : names) reports.push_back(cocycle::run_suite(n, cfg));
    }
    return emit(reports, json, out_path);
  } catch (const cocycle::Error& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }
}
