#pragma once

#include <string>
#include <vector>

#include "hurwitz/oracle.hpp"

namespace hurwitz {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Suite names, in acceptance order.
const std::vector<std::string>& verify_suite_names();

// Runs one named suite ("all" runs every suite back to back).
std::vector<SuiteResult> run_verify(const std::string& which,
                                    const Budget& budget);

}  // namespace hurwitz
