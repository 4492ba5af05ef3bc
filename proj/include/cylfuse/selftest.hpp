#ifndef CYLFUSE_SELFTEST_HPP_
#define CYLFUSE_SELFTEST_HPP_

#include <string>
#include <vector>

namespace cylfuse {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // first failure or a short summary
};

// Runs the full verification grid: every closed formula against its
// independent enumeration or numeric counterpart, at fixed tolerances.
std::vector<CriterionResult> run_acceptance_criteria();

}  // namespace cylfuse

#endif  // CYLFUSE_SELFTEST_HPP_
