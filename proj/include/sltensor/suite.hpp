#pragma once

#include "sltensor/report.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sltensor {

/// One check with its parameters in text form. Recognized keys:
/// n, V, S, g, N (degree / box / radius bound), samples, b, a, lambda, k, l, and corrupt
/// (an sl element such as "e(1,2)" whose table image is negated; relations, fourier, hfree, hfree_composed).
struct SuiteItem {
  std::string check;
  std::map<std::string, std::string> params;
};

struct SuiteConfig {
  std::uint64_t seed = 20240611;
  std::vector<SuiteItem> items;

  /// {"seed": 7, "items": [{"check": "relations", "params": {"n": "2", ...}}, ...]}
  static SuiteConfig from_json(const std::string& text);
};

std::vector<std::string> known_checks();

/// Runs one check; malformed parameters raise InvalidInput.
CheckRecord run_check(const SuiteItem& item, std::uint64_t seed);

/// Rejects unknown check names before running anything; records come back in config order.
std::vector<CheckRecord> run_suite(const SuiteConfig& config);

/// The full acceptance grid.
SuiteConfig default_suite();

}  // namespace sltensor
