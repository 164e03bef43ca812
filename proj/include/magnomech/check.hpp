// check.hpp: oracle battery run by `magnomech check`: cross-checks the
// Lyapunov route against time integration and the stability, physicality and
// entropy-budget invariants at one parameter point.

#pragma once

#include <string>
#include <vector>

#include "magnomech/model.hpp"

namespace magnomech {

struct CheckResult {
  std::string name;
  bool passed{false};
  std::string detail;
};

std::vector<CheckResult> run_oracle_battery(const SystemParams& params);

}  // namespace magnomech
