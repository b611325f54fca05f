#pragma once

#include <functional>
#include <string>
#include <vector>

namespace nh {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

int acceptance_count();
CriterionResult run_criterion(int id);
// Runs every criterion in order; on_result fires as each one finishes.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});
std::string format_result(const CriterionResult& r);

}  // namespace nh
