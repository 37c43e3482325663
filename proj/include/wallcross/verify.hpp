#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wallcross/rational.hpp"

namespace wallcross {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // filled on failure (got vs want)
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = true;
  double seconds = 0.0;
  std::vector<CheckResult> checks;
};

struct VerifyOptions {
  std::uint64_t seed = 20240913;
  Int oracle_radius = 25;
  int enumeration_instances = 100;
  int property_cases = 1000;
};

/// Run one acceptance criterion (1..9).
CriterionResult run_criterion(int number, const VerifyOptions& opts);

/// Run the full identity suite (all nine criteria).
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opts);

}  // namespace wallcross
