// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "checks.hpp"

using namespace pearcey::checks;

int main() {
  std::map<int, std::vector<Check>> by;
  for (auto& c : all_checks())
    if (c.criterion > 0) by[c.criterion].push_back(std::move(c));

  int failed = 0;
  for (int k = 1; k <= 10; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Result> res;
    for (const auto& c : by[k]) res.push_back(run(c));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int ok = 0;
    for (const auto& r : res) ok += r.passed;
    const double budget = criterion_budget_seconds(k);
    const bool in_time = budget <= 0 || secs <= budget;
    const bool pass = !res.empty() && ok == int(res.size()) && in_time;
    failed += !pass;
    std::printf("criterion %2d %s  %s  [%d/%zu checks, %.2f s]\n", k, pass ? "PASS" : "FAIL",
                criterion_title(k).c_str(), ok, res.size(), secs);
    if (!in_time) std::printf("    over the %.0f s budget\n", budget);
    for (const auto& r : res)
      if (!r.passed)
        std::printf("    failed: %s: measured %.6g, target %.6g, tolerance %.3g%s%s\n",
                    r.name.c_str(), r.measured, r.target, r.tolerance,
                    r.error.empty() ? "" : ", error: ", r.error.c_str());
  }
  std::printf("%d of 10 criteria failed\n", failed);
  return failed ? 1 : 0;
}
