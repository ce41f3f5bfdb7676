#pragma once

#include <string>
#include <vector>

namespace wittartin {

/// One named verification outcome. `detail` carries a witness on failure.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using CheckReport = std::vector<CheckResult>;

inline bool all_passed(const CheckReport& report) {
  for (const auto& c : report)
    if (!c.passed) return false;
  return true;
}

inline void append(CheckReport& into, const CheckReport& more) { into.insert(into.end(), more.begin(), more.end()); }

}  // namespace wittartin
