// Acceptance suite: runs every verification suite at its stated scope and
// prints one line per criterion.  Exit status is nonzero if anything fails.

#include <iostream>
#include <string>
#include <vector>

#include "hurwitz/verify.hpp"

int main() {
  using namespace hurwitz;
  // (criterion number, suite, human label)
  const std::vector<std::tuple<int, std::string, std::string>> criteria = {
      {1, "oracle-vs-recursion", "oracle and recursion agree (simple family)"},
      {2, "khat-table", "stored khat polynomial rows reproduced exactly"},
      {3, "eulerian-k02", "two-face pruned counts follow the Eulerian form"},
      {4, "q-apparatus", "q polynomial apparatus"},
      {5, "intersection-triangle", "intersection-number triangle"},
      {6, "caj-unpruned", "unpruned cut-and-join identity"},
      {7, "orbifold", "orbifold family (a = 2) cross-checks"},
      {8, "belyi", "fatgraph, lattice and Euler-characteristic checks"},
      {9, "gw", "degree-zero GW table, relations, cycle comparison"},
      {10, "properties", "symmetry, round-trips, determinism, cache"},
  };
  // fixed desk-scale grids; the ceiling only needs to admit them
  Budget budget{10'000'000'000'000UL};
  bool all_ok = true;
  for (const auto& [number, suite, label] : criteria) {
    bool ok = true;
    std::string detail;
    try {
      for (const SuiteResult& result : run_verify(suite, budget))
        for (const CheckResult& c : result.checks)
          if (!c.passed) {
            ok = false;
            detail += " [" + c.name + (c.detail.empty() ? "" : ": " + c.detail) +
                      "]";
          }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string(" exception: ") + e.what();
    }
    std::cout << "criterion " << number << " (" << label << "): "
              << (ok ? "PASS" : "FAIL") << detail << "\n";
    if (!ok) all_ok = false;
  }
  std::cout << (all_ok ? "acceptance: all criteria PASS"
                       : "acceptance: FAILURES present")
            << "\n";
  return all_ok ? 0 : 1;
}
