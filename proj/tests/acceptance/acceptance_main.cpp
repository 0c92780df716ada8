#include <iostream>

#include "demo/criteria.hpp"

int main() {
  int failed = 0;
  for (const auto& r : tracta::demo::run_all()) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": " << r.detail << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << (tracta::demo::kCriterionCount - failed) << "/" << tracta::demo::kCriterionCount
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
