#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// The ten acceptance criteria, in order, with their stated runtime budgets
// enforced. `jobs` bounds the search parallelism, `seed` feeds every
// randomized sweep.
std::vector<CriterionResult> run_acceptance(int jobs, std::uint64_t seed);

}  // namespace toric
