#pragma once

#include <string>
#include <vector>

namespace qflag {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  int passed() const;
  int failed() const;
};

// Invariant suite over the standard test types (A1, A2, A3, B2, G2 and every
// type of rank <= 4 for the root-system checks).
SelftestReport run_selftest();

}  // namespace qflag
