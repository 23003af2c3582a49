#include <iostream>

#include "criteria.hpp"

int main() {
  int failed = 0;
  burniat::acceptance::run_all([&](const burniat::acceptance::CriterionResult& r) {
    std::cout << r.line() << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
