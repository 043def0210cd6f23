// Acceptance suite: runs every criterion at its exact tolerance and prints
// one pass/fail line per criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>

#include "bgg/selftest.hpp"

int main() {
  using namespace bgg;
  bool all = true;

  auto t0 = std::chrono::steady_clock::now();
  std::vector<CriterionResult> results = run_selftest();
  auto t1 = std::chrono::steady_clock::now();

  for (const CriterionResult& r : results) {
    std::cout << "criterion " << r.id << " [" << r.name << "]: "
              << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ")\n";
    all = all && r.pass;
  }

  // criterion 11: two consecutive runs yield byte-identical reports
  {
    std::string first = selftest_report(results).dump(1);
    std::string second = selftest_report(run_selftest()).dump(1);
    bool same = (first == second);
    std::cout << "criterion 11 [determinism]: " << (same ? "PASS" : "FAIL")
              << " (report bytes " << first.size() << " vs " << second.size() << ")\n";
    all = all && same;
  }

  auto t2 = std::chrono::steady_clock::now();
  std::cerr << "acceptance: "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            << " ms first run, "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t2 - t0).count()
            << " ms total\n";
  std::cout << (all ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES PRESENT") << "\n";
  return all ? 0 : 1;
}
