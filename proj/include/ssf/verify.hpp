#pragma once

#include <string>
#include <vector>

namespace ssf {

/// Outcome of one machine-checked property suite over the catalog.
struct SuiteResult {
  std::string name;
  std::string description;
  bool pass = true;
  std::size_t groups = 0;  // groups (or instances) examined
  std::size_t checks = 0;  // individual assertions evaluated
  double seconds = 0.0;
  std::vector<std::string> failures;
};

/// Suite names in execution order.
const std::vector<std::string>& suite_names();

/// Runs a suite over catalog groups of order <= max_order (each suite also
/// has its own ceiling). Throws BoundError for max_order above 64 and
/// PreconditionError for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::size_t max_order);

}  // namespace ssf
