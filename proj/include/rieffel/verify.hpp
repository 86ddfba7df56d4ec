#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace rieffel {

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

enum class Comparison { AtMost, AtLeast };

struct CheckResult {
  std::string name;
  double measured;
  Comparison comparison;
  double threshold;
  bool passed;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Replaces the threshold of the named check.
  std::map<std::string, double> thresholds;
};

struct VerifyReport {
  std::uint64_t seed;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Names of the checks in run order.
std::vector<std::string> verify_check_names();

/// Seeded property suite over every module. Throws SchemaError when a
/// threshold override names an unknown check.
VerifyReport run_verify(const VerifyOptions& options);

nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace rieffel
