#pragma once

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace apolar {

/// Outcome of one seeded identity suite.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int max_degree = 0;
  int checks = 0;
  int failures = 0;
  std::optional<std::string> first_counterexample;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return failures == 0; }
  /// Count one check; on failure keep the first description.
  void record(bool ok, const std::string& what);
};

const std::vector<std::string_view>& suite_names();

/// Runs "duality", "dims", "quartics" or "action". Throws
/// std::invalid_argument for unknown names or max_degree < 0.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, int max_degree);

}  // namespace apolar
