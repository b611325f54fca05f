#include "nh/acceptance.hpp"

#include <iostream>

int main() {
  int failed = 0;
  nh::run_acceptance([&](const nh::CriterionResult& r) {
    std::cout << nh::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (nh::acceptance_count() - failed) << "/" << nh::acceptance_count() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
