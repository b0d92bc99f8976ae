// The aggregated invariant suite behind `check --all`.
#pragma once

#include <string>
#include <vector>

namespace triality::checks {

struct Summary {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> lines;  // one "ok:"/"FAIL:" line per check
  bool ok() const { return failed == 0; }
};

Summary run_all(unsigned seed = 20240811);

}  // namespace triality::checks
