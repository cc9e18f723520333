#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tableaux {

struct CheckOptions {
  int trials = 100;
  int max_boxes = 8;
  int max_entry = 4;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency
};

struct CheckReport {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;  // empty when everything passed
};

// Suites: "involutions", "differential", "dual", "words", or "all".
// Trials are seeded individually, so reports do not depend on threading.
std::vector<CheckReport> run_checks(const std::string& suite, const CheckOptions& opts);

}  // namespace tableaux
