#pragma once

#include "smoothsum/pipeline.hpp"

namespace smoothsum::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs one acceptance criterion (1..10). Seeds make reruns identical.
CriterionResult run_criterion(int id, u64 seed);
std::vector<CriterionResult> run_all(u64 seed);

inline constexpr int kCriterionCount = 10;

}  // namespace smoothsum::verify
