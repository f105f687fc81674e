#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cohann/report.hpp"

namespace cohann {

/// A bundled verification scenario. `id` orders the suite.
struct Scenario {
  std::string id;
  std::string name;
  std::vector<std::string> tags;
  std::function<VerificationReport()> run;
};

const std::vector<Scenario>& bundled_scenarios();

struct ScenarioResult {
  const Scenario* scenario = nullptr;
  VerificationReport report;
};

/// Runs the scenarios carrying `tag` (all when empty), in id order. A
/// scenario that throws is reported as a failed "error" check.
std::vector<ScenarioResult> run_suite(const std::optional<std::string>& tag);

/// Every tag used by some scenario, sorted.
std::vector<std::string> suite_tags();

}  // namespace cohann
