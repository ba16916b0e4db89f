#pragma once

// Named verification suites shared by the command-line driver, the acceptance tests and the
// Python bindings.

#include "cocycle/forms.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cocycle {

/// Flat key = value configuration. Unknown keys and malformed values throw ConfigParse.
struct SuiteConfig {
  QuadratureSpec quad{};
  std::uint64_t seed = 0x5EED;
  std::vector<int> cs_orders{3, 5, 6, 8};
  int defect_samples = 100;
  double defect_spread = 0.5;  // half-angle bound of the random SU(2) factors
  double hoshii_step = 5e-2;
  int adinv_samples = 20;
  int prism_samples = 10;
  bool timing = true;  // false zeroes the ms fields so reports compare byte for byte

  void set(const std::string& key, const std::string& value);
  static SuiteConfig parse(std::string_view text);
  static SuiteConfig load(const std::string& path);
};

using CheckValue = std::variant<double, std::string>;

struct Check {
  std::string id;
  CheckValue expected;
  CheckValue computed;
  double tol = 0.0;
  bool pass = false;
  double ms = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool pass = false;  // conjunction of the check flags
};

/// Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config = {});

/// (name, one-line description) in a fixed order.
const std::vector<std::pair<std::string, std::string>>& list_suites();

/// {suite, checks: [{id, expected, computed, tol, pass, ms}], pass}
std::string to_json(const SuiteReport& report, int indent = 2);
/// One line per check.
std::string to_text(const SuiteReport& report);

}  // namespace cocycle
