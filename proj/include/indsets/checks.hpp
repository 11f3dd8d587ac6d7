#pragma once

#include <string>
#include <vector>

namespace indsets {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Every published value and generating function the library can reproduce:
/// sequence prefixes, tabulated generating functions, closed forms, the
/// P-family first-column identity and the P_4 bijection examples. Fixed
/// order.
std::vector<CheckResult> run_reference_checks();

}  // namespace indsets
