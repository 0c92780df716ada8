#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tracta::demo {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

inline constexpr int kCriterionCount = 13;

/// Demo name of criterion `id` (1-based), e.g. "hahn-plucker".
std::string criterion_name(int id);
std::optional<int> criterion_id(const std::string& name);

/// Runs one criterion. Library exceptions are caught and reported as failures.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

}  // namespace tracta::demo
