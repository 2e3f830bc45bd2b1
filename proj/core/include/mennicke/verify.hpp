#pragma once

#include "mennicke/report.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mennicke {

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
};

struct CheckSpec {
  std::string id;  // "s17.r_uniqueness"
  int section = 0;
  std::string description;
  std::function<Report(const RunOptions&)> run;
};

struct CheckResult {
  std::string check_id;
  int section = 0;
  bool pass = false;
  std::string detail;
  long elapsed_ms = 0;
  Report report;
};

inline constexpr int kFirstSection = 2;
inline constexpr int kLastSection = 20;

// Sorted by id.
const std::vector<CheckSpec>& check_registry();

// Runs the checks of the given sections (all when empty), in id order.
std::vector<CheckResult> run_checks(const std::vector<int>& sections, const RunOptions& options);

}  // namespace mennicke
