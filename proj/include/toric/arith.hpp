#pragma once

#include "toric/divisor.hpp"

#include <optional>
#include <vector>

namespace toric {

// A place of Q: the archimedean absolute value or a prime.
struct Place {
  bool infinite = true;
  Int p;
  static Place inf() { return Place{true, Int(0)}; }
  static Place prime(Int q) { return Place{false, std::move(q)}; }
};

Rat abs_place(const Rat& x, const Place& place);

// Point of the open torus written in the chart of a maximal cone; every
// coordinate nonzero.
struct RationalPoint {
  int chart = -1;
  RatVector y;
};

RationalPoint unit_point(const Fan& fan, int chart);  // Q0 = (1,...,1)
bool is_unit_point(const RationalPoint& P);

// Integer Cox lift with the coprimality certificate built in.
struct CoxPoint {
  int chart = -1;
  IntVector X;
};

// Chart exponent matrix: y_i = prod_j X_j^(E(i,j)).
IntMatrix chart_exponents(const Fan& fan, int chart);

// Lift a torus point to integer Cox coordinates: per prime p the valuation
// vector u_p is located in the fan and its cone coordinates give the
// exponents (zero outside one cone, which forces coprimality along every
// primitive collection); signs are the lexicographically first valid vector.
CoxPoint cox_lift(const Fan& fan, const RationalPoint& P);

// |X|^e magnitudes only; enough for heights, which are sign-blind.
IntVector cox_lift_magnitudes(const Fan& fan, const RationalPoint& P);

// Prime decomposition of one chart coordinate; precomputable per fraction so
// box scans do not refactor the same values millions of times.
struct CoordinateValuations {
  std::vector<std::pair<Int, long>> primes;  // (p, v_p(y)), v nonzero
};

CoordinateValuations coordinate_valuations(const Rat& y);

// Shared core of the lift: merge per-coordinate valuations into the vectors
// u_p, locate each in the fan, accumulate the exponents. The scratch variant
// writes into reused buffers so scans do not allocate per point.
struct LiftScratch {
  std::vector<std::pair<Int, IntVector>> ups;
  int ups_used = 0;
  IntVector cone_coords;
  IntVector X;
  Int power;
};

IntVector lift_magnitudes(const Fan& fan, int chart,
                          const std::vector<const CoordinateValuations*>& coords);
const IntVector& lift_magnitudes(const Fan& fan, int chart,
                                 const std::vector<const CoordinateValuations*>& coords,
                                 LiftScratch& scratch);

// Effective monomial exponents D(sigma) per cone; requires O(D) globally
// generated. Precomputed once and shared by the search loops.
struct HeightTable {
  std::vector<IntVector> exponents;          // per maximal cone
  std::vector<std::vector<unsigned long>> expo_ui;  // same, small-int view
};

HeightTable height_table(const Fan& fan, const TDivisor& D);

// max over cones of prod |X_i|^(D(sigma)_i) for an already-lifted point.
Rat height_from_magnitudes(const HeightTable& table, const IntVector& X);

// Salberger height over Q: the single archimedean factor
// max_sigma |X^{D(sigma)}| on a coprime lift.
Rat salberger_height(const Fan& fan, const TDivisor& D, const RationalPoint& P);
Rat salberger_height(const Fan& fan, const HeightTable& table,
                     const RationalPoint& P);

// Single-chart monomial |X^{D(sigma)}|; the sharp normalization used by the
// unit-constant inequalities.
Rat monomial_height(const Fan& fan, const TDivisor& D, const RationalPoint& P,
                    int sigma);

// min(1, max_i |y_i - 1|) at the given place.
Rat distance(const RationalPoint& P, const Place& place);

}  // namespace toric
