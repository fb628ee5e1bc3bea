#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pearcey::checks {

// One numerical property: passes when |measured - target| <= tolerance.
struct Check {
  std::string name;
  std::string module;
  int criterion;  // acceptance criterion number, 0 if none
  double target;
  double tolerance;
  std::function<double()> measure;
};

struct Result {
  std::string name, module;
  int criterion;
  double measured, target, tolerance, deviation;
  bool passed;
  double seconds;
  std::string error;  // exception text when the measurement threw
};

// Wall-clock budgets from the acceptance criteria, 0 when none is stated.
double criterion_budget_seconds(int criterion);
std::string criterion_title(int criterion);

std::vector<Check> all_checks();

Result run(const Check& c, double tol_scale = 1.0);

}  // namespace pearcey::checks
