#pragma once

#include "toric/divisor.hpp"

#include <optional>
#include <vector>

namespace toric {

struct PositivityReport {
  bool nef = false;
  bool ample = false;
  bool big = false;
  bool globally_generated = false;  // == nef on smooth complete toric
  bool very_ample = false;          // == ample
  // witnesses
  int bad_ray = -1, bad_cone = -1;  // convexity failure for nef/ample
  std::optional<RatVector> interior_point;  // of P_D when big
};

// Convexity scan of phi_D across all (ray, cone) pairs; bigness through
// strict LP feasibility of the P_D system.
PositivityReport positivity(const Fan& fan, const TDivisor& D);

// Witness for hypothesis (**): a maximal cone whose complement rays all have
// non-positive coordinates in its basis.
struct StarWitness {
  int sigma0 = -1;
  std::vector<int> inside;   // sigma0(1), sorted ray indices
  std::vector<int> outside;  // the other r rays, ascending
  IntMatrix b;               // n x r, outside[j] = -sum_i b(i,j) * inside[i]
};

std::optional<StarWitness> star_witness(const Fan& fan);

struct EffConeReport {
  std::vector<IntVector> extreme_classes;  // primitive, deduplicated
  bool simplicial = false;
  std::optional<StarWitness> sigma0;
};

// Extreme rays of the pseudo-effective cone spanned by boundary classes,
// found by one exact membership LP per generator. Also runs the independent
// (**) search and insists the two verdicts agree.
EffConeReport effective_cone(const Fan& fan);

}  // namespace toric
