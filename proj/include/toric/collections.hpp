#pragma once

#include "toric/positivity.hpp"

#include <optional>
#include <vector>

namespace toric {

struct PrimitiveCollection {
  std::vector<int> rays;  // sorted ray indices, a minimal non-face
  bool centred = false;
  int containing_cone = -1;   // cone of the ray sum when not centred
  IntVector cone_coords;      // its coordinates there
  int cardinality() const { return (int)rays.size(); }
  Relation relation(const Fan& fan) const;  // indicator vector (centred only)
};

// Minimal non-faces of the ray-set complex, by increasing size with superset
// pruning. Emits a warning flag (no error) when no centred collection shows
// up, which cannot happen for projective fans.
struct CollectionsResult {
  std::vector<PrimitiveCollection> collections;
  bool has_centred = false;
};

CollectionsResult primitive_collections(const Fan& fan);

struct BetaResult {
  Int beta;
  std::vector<PrimitiveCollection> minimizers;  // centred, degree == beta
  // equals alpha(Q0, X) exactly when Eff(X) is simplicial (and D is nef+big,
  // which is a precondition); absent otherwise.
  std::optional<Int> alpha;
};

// Minimal degree over centred primitive relations. Preconditions: O(D)
// globally generated and big; at least one centred collection.
BetaResult beta(const Fan& fan, const TDivisor& D);

struct LocusComponent {
  std::vector<int> collection;   // the centred collection of degree beta
  std::vector<int> free_coords;  // chart positions of sigma0(1) rays in it
  int cardinality = 0;           // the component is P^(cardinality-1)
};

struct AccumulatingLocus {
  int sigma0 = -1;
  Int beta;
  std::vector<LocusComponent> components;
};

// Where the approximation constant concentrates: one component per centred
// collection of minimal degree, cut out by y_i = 1 on the remaining sigma0
// chart coordinates. Needs an ample divisor, hypothesis (**), and X != P^n.
AccumulatingLocus accumulating_locus(const Fan& fan, const TDivisor& D);

struct DiagnosticsReport {
  bool outside_relations_positive = false;
  bool outside_deg_ge_beta = false;
  bool cpc_one_ray_outside = false;
  bool cpc_disjoint = false;
  bool degree_grid = false;
  bool all() const {
    return outside_relations_positive && outside_deg_ge_beta &&
           cpc_one_ray_outside && cpc_disjoint && degree_grid;
  }
};

// Finite verification of the structural facts behind the main lower bound:
// positivity and degree of the outside-ray relations, single-outside-ray
// shape and pairwise disjointness of centred collections, and the full
// deg(P_{n+j0}) >= b(i0,j0) * beta grid.
DiagnosticsReport diagnostics_star(const Fan& fan, const TDivisor& D);

}  // namespace toric
