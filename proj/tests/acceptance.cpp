// Acceptance suite: runs every verification criterion and prints one
// PASS/FAIL line per item.  Exit status is the number of failures.
#include <chrono>
#include <iostream>

#include "qpbw/checks.hpp"

int main() {
  auto start = std::chrono::steady_clock::now();
  int failures = qpbw::run_and_report_acceptance(std::cout);
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
  std::cout << (failures == 0 ? "ALL CHECKS PASSED" : "FAILURES: " + std::to_string(failures))
            << " (" << elapsed.count() << "s)\n";
  return failures;
}
