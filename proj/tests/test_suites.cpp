#include "catch_amalgamated.hpp"

#include "cocycle/error.hpp"
#include "cocycle/suites.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

using namespace cocycle;

TEST_CASE("suite registry") {
  const auto& suites = list_suites();
  CHECK(suites.size() == 9);
  for (const auto& [name, desc] : suites) {
    CHECK(!name.empty());
    CHECK(!desc.empty());
  }
  try {
    run_suite("no-such-suite");
    FAIL("expected UnknownSuite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSuite);
  }
}

TEST_CASE("configuration parsing") {
  const SuiteConfig c = SuiteConfig::parse(
      "# comment\n"
      "quad.order = 8\n"
      "seed=42\n"
      "cs.orders = 3, 7\n"
      "defect.spread = 0.25   # trailing comment\n"
      "timing = false\n");
  CHECK(c.quad.order == 8);
  CHECK(c.seed == 42);
  CHECK(c.cs_orders == std::vector<int>{3, 7});
  CHECK(c.defect_spread == 0.25);
  CHECK(!c.timing);
  CHECK(c.prism_samples == SuiteConfig{}.prism_samples);

  for (const char* bad : {"nope = 1\n", "quad.order = x\n", "quad.order\n", "cs.orders = 1\n", "defect.spread = 1e\n"}) {
    try {
      SuiteConfig::parse(bad);
      FAIL("expected ConfigParse for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ConfigParse);
    }
  }
  CHECK_THROWS_AS(SuiteConfig::load("/nonexistent/cocycle.cfg"), Error);
}

TEST_CASE("configuration files") {
  const std::string path = "test_suites_config.cfg";
  {
    std::ofstream f(path);
    f << "prism.samples = 3\nhoshii.step = 0.01\n";
  }
  const SuiteConfig c = SuiteConfig::load(path);
  CHECK(c.prism_samples == 3);
  CHECK(c.hoshii_step == 0.01);
  std::remove(path.c_str());
}

TEST_CASE("reports are reproducible without timing") {
  SuiteConfig cfg;
  cfg.timing = false;
  const SuiteReport a = run_suite("transfer", cfg), b = run_suite("transfer", cfg);
  CHECK(to_json(a) == to_json(b));
  CHECK(to_text(a) == to_text(b));
  CHECK(a.pass);
}

TEST_CASE("report schema") {
  SuiteConfig cfg;
  cfg.timing = false;
  const SuiteReport r = run_suite("configured-homology", cfg);
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j.at("suite") == "configured-homology");
  CHECK(j.at("pass").is_boolean());
  REQUIRE(j.at("checks").is_array());
  REQUIRE(j.at("checks").size() == r.checks.size());
  bool all = true;
  for (const auto& c : j.at("checks")) {
    for (const char* key : {"id", "expected", "computed", "tol", "pass", "ms"}) CHECK(c.contains(key));
    CHECK(c.at("ms") == 0.0);
    all = all && c.at("pass").get<bool>();
  }
  CHECK(j.at("pass").get<bool>() == all);
}

TEST_CASE("config overrides reach the suites") {
  SuiteConfig cfg;
  cfg.timing = false;
  cfg.prism_samples = 1;
  CHECK(run_suite("prism", cfg).checks.size() == 1);
  cfg.cs_orders = {3};
  CHECK(run_suite("cs-pairing", cfg).checks.size() == 1);
}
