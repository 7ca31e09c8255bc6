#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qcoord {

/// Outcome of one identity. Witnesses (the two reduced sides) are filled on failure.
struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  std::optional<double> deviation;
  std::optional<double> tolerance;
};

struct CheckReport {
  std::string suite;
  std::vector<IdentityCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const IdentityCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
  void add(std::string name, bool ok, std::string lhs = {}, std::string rhs = {}) {
    IdentityCheck c;
    c.name = std::move(name);
    c.passed = ok;
    if (!ok) {
      c.lhs = std::move(lhs);
      c.rhs = std::move(rhs);
    }
    checks.push_back(std::move(c));
  }
  void add_numeric(std::string name, double deviation, double tolerance) {
    IdentityCheck c;
    c.name = std::move(name);
    c.passed = deviation <= tolerance;
    c.deviation = deviation;
    c.tolerance = tolerance;
    checks.push_back(std::move(c));
  }
};

}  // namespace qcoord
