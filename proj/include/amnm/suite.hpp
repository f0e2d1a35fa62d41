#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace amnm {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // 0 when the criterion has no time limit
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  std::size_t oracle_starts = 8;      // per cell, criterion 7
  std::size_t corroboration_starts = 64;  // criterion 8
};

/// Runs one acceptance criterion (1..9).
CriterionResult run_criterion(int id, const SuiteOptions& options = {});

/// Runs all nine criteria in order.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& options = {});

}  // namespace amnm
