#pragma once

// Batch verification of the published constants behind the two curve
// families: derived quantities, conic witnesses, condition residues,
// expanded rational-function coefficients, factorizations, and the local
// certificates. Each check is independent and carries a short name.

#include <string>
#include <vector>

namespace hct {

struct GoldenCheck {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<GoldenCheck> run_golden_suite();

}  // namespace hct
