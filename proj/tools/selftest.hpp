#pragma once

#include <string>
#include <vector>

namespace quintrank::cli {

struct SelfCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The invariant suite behind `quintrank selftest`. Output is deterministic.
std::vector<SelfCheck> run_selftest();

}  // namespace quintrank::cli
