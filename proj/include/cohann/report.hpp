#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cohann {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of an instance-level verification: a list of named checks.
struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const VerificationReport& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
  }
  /// False for an empty report: nothing was verified.
  bool passed() const {
    if (checks.empty()) return false;
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

}  // namespace cohann
