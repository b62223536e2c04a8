#pragma once

#include "toric/divisor.hpp"
#include "toric/poly.hpp"

#include <cstdint>
#include <vector>

namespace toric {

// All nonzero relations with coefficients in [0, bound], deduplicated and
// sorted by total degree then lexicographically. Scans integer combinations
// of the kernel basis inside box bounds derived from its pseudo-inverse.
std::vector<Relation> enumerate_positive_relations(const Fan& fan,
                                                   long coeff_bound);

// A positive relation moves in very free curves exactly when its support
// rays span the whole space.
bool very_free(const Fan& fan, const Relation& c);

struct SplittingType {
  std::vector<long> degrees;  // ascending
  long mu_min() const { return degrees.empty() ? 0 : degrees.front(); }
  Int total() const {
    Int t = 0;
    for (long d : degrees) t += d;
    return t;
  }
  bool operator==(const SplittingType& o) const { return degrees == o.degrees; }
};

// Splitting type of the pulled-back tangent bundle along a general member of
// the family attached to a positive relation. Lifts are products of distinct
// linear forms with seeded coefficients from {1..1000}; the presentation is
// certified to be a sub-bundle inclusion (constant gcd of maximal minors) and
// the multiset is read off the h^0 jumps of the dual kernel bundle at
// successive twists. Two independent seeds must agree.
SplittingType splitting_type(const Fan& fan, const Relation& c,
                             std::uint64_t seed);

// A rational curve through (1,...,1) written in a chart: t -> (m_i t + 1).
// The Cox lift lives in `polys` (one homogeneous polynomial per ray) and the
// curve hits the unit point at parameter (u:v) = (0:1).
struct CurveFamily {
  int chart = -1;
  RatVector params;
  std::vector<HPoly> polys;
  Relation cls;

  // swap u and v in every component; moves the unit-point parameter to
  // (1:0), i.e. t = infinity.
  CurveFamily reparametrized() const;
};

// General line in the chart of sigma; every parameter must be nonzero. Its
// class completes sum of sigma(1) by the cone containing the negative.
CurveFamily general_line(const Fan& fan, int sigma, const RatVector& m);

// Same construction with zero parameters allowed on a subset of coordinates
// (used for the lines inside accumulating components). At least one m_i must
// be nonzero.
CurveFamily line_through_unit(const Fan& fan, int sigma, const RatVector& m);

}  // namespace toric
