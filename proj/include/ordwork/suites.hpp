#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ordwork::suites {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// First failing instance; null when none.
  nlohmann::json counterexample;
  /// Suite-specific totals (corpus sizes and the like).
  nlohmann::json stats = nlohmann::json::object();
};

/// Suite names in acceptance order.
const std::vector<std::string>& names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run(const std::string& name, std::uint64_t seed);

}  // namespace ordwork::suites
