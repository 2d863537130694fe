#pragma once

// Self-check suites behind `srdist verify`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subriemann {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// "oracle", "submetry", "lemmas", "br-counterexample", "cutlocus".
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws std::invalid_argument
/// for unknown names. Results depend only on (suite, n, seed).
std::vector<SuiteReport> run_suite(std::string_view suite, std::size_t n, std::uint64_t seed);

}  // namespace subriemann
