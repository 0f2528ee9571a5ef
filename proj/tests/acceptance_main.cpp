// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.
#include <iostream>

#include "fpsloop/acceptance.hpp"

int main() {
  const fpsloop::AcceptanceOptions options;
  const auto results = fpsloop::run_acceptance(options);
  int failed = 0;
  for (const auto& r : results) {
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.seconds
              << " s): " << r.name << " | " << r.detail << std::endl;
  }
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
