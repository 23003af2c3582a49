#pragma once

#include <functional>
#include <string>
#include <vector>

namespace burniat::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;

  // "PASS  1 generator-table ... (detail) [0.01 s]"
  std::string line() const;
};

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id);

// Runs every criterion in order, reporting each result as it finishes.
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& report = {});

}  // namespace burniat::acceptance
