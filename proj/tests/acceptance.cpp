// Runs every acceptance criterion at full scale; one PASS/FAIL line each.
#include <iostream>

#include <visikit/verify.hpp>

int main() {
  bool all = true;
  for (const visikit::CriterionResult& r : visikit::run_acceptance(visikit::VerifyConfig{})) {
    std::cout << visikit::format_result(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
