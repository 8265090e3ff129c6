#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace irtr {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  bool fast = false;          ///< skip the Monte-Carlo sampling checks
  bool inject_fault = false;  ///< corrupt one identity to self-test the harness
  std::uint64_t seed = 20240901;
};

/// Runs every cross-module consistency check (oracle agreements, boundary
/// bisection, tangency, Monte-Carlo attainment) and reports one result per
/// check.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

}  // namespace irtr
