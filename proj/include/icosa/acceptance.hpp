#pragma once

// The ten acceptance criteria as runnable checks, shared by `icosa verify` and
// the acceptance binary.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace icosa {

struct RunConfig {
  std::optional<double> tol;  // overrides the geometric tolerances of criteria 4 and 10
  int digits = 30;            // significant digits for extended-precision output, 15..50
  int threads = 1;
  std::uint64_t seed = 20240601;
  std::string out;
  /// Throws std::invalid_argument.
  void validate() const;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string measured;
  bool counted = true;  // informational checks do not affect the verdict
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  std::vector<Check> checks;
  nlohmann::json detail = nlohmann::json::object();
};

inline constexpr int kCriteria = 10;

CriterionResult runCriterion(int id, const RunConfig& cfg);
/// All criteria when which is empty.
std::vector<CriterionResult> runAcceptance(const RunConfig& cfg, const std::vector<int>& which = {});

/// Timing is left out unless asked for, so reports are reproducible byte for byte.
nlohmann::json resultJson(const CriterionResult& r, bool timing = false);

}  // namespace icosa
