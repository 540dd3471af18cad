#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "redwords/numeric.hpp"

namespace redwords {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample on failure
};

struct VerifyOptions {
  int max_n = 6;  // 3..10
  std::uint64_t seed = 20240601;
  /// Closed-form summand under test. Replaceable so a seeded bug can be
  /// shown to fail the suite.
  std::function<Rational(int, int)> term;
};

/// Runs every cross-check whose parameters fit under max_n. Writes one
/// "[PASS]"/"[FAIL]" line per check to `log` as it goes.
std::vector<CheckResult> run_verification(const VerifyOptions& options, std::ostream& log);

/// 99.9% quantile of chi-square with 15 degrees of freedom.
inline constexpr double kChiSquare15Quantile999 = 37.697298218353830;

}  // namespace redwords
