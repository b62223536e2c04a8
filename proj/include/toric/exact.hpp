#pragma once

#include "toric/numeric.hpp"

#include <optional>
#include <vector>

namespace toric {

// Row-style Hermite normal form: U*M == H with U unimodular, pivots positive
// and strictly moving right row by row, entries above each pivot reduced into
// [0, pivot). Zero rows collect at the bottom.
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
  int rank = 0;
};

HnfResult hermite_normal_form(const IntMatrix& M);

// Basis of the saturated lattice {v : M*v = 0}, one vector per row. The rows
// come out of the unimodular factor of the HNF of M^T, so the lattice is the
// full integer kernel (in particular saturated) by construction.
IntMatrix kernel_lattice(const IntMatrix& M);

int int_rank(const IntMatrix& M);

// Does v lie in the lattice spanned by the rows of `basis`?
bool lattice_contains(const IntMatrix& basis, const IntVector& v);

// Exact simplex over the rationals, Bland's rule throughout.
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RatVector x;
  Rat objective;
};

// min c.x subject to A x = b, x >= 0.
LpResult solve_lp(const RatMatrix& A, const RatVector& b, const RatVector& c);

// Is `target` a non-negative combination of `gens`?
bool in_cone(const std::vector<IntVector>& gens, const IntVector& target);

struct StrictLp {
  bool feasible = false;
  RatVector witness;  // A*witness > b componentwise when feasible
};

// Strict feasibility of A x > b, decided exactly by maximizing the slack
// margin (capped at 1).
StrictLp lp_strict_feasible(const IntMatrix& A, const RatVector& b);

// Dense rational elimination helpers.
int rat_rank(RatMatrix M);
long nullity(const RatMatrix& M);
RatMatrix rat_inverse(const RatMatrix& M);  // fails on singular input
std::optional<RatVector> solve_linear(const RatMatrix& A, const RatVector& b);

IntVector primitive_part(const IntVector& v);  // v / gcd(v), gcd(0)=0 kept

}  // namespace toric
