// Standalone randomized property suites.
// Usage: property_tests [--seed S] [--cases N]
#include <cstdlib>
#include <iostream>
#include <string>

#include "property_checks.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240611;
  int cases = 1000;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--seed") {
      seed = std::stoull(argv[i + 1]);
    } else if (flag == "--cases") {
      cases = std::stoi(argv[i + 1]);
    } else {
      std::cerr << "unknown flag " << flag << "\n";
      return 2;
    }
  }
  int failures = 0;
  for (const auto& r : knotrep::props::run_all(seed, cases)) {
    std::cout << (r.failures == 0 ? "ok   " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures
              << " failures";
    if (!r.first_failure.empty()) std::cout << " (" << r.first_failure << ")";
    std::cout << "\n";
    failures += r.failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
