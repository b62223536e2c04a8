#pragma once

#include "toric/curves.hpp"
#include "toric/positivity.hpp"

#include <vector>

namespace toric {

// The rank-2 classification: P(O + O(a_1) + ... + O(a_t)) over P^s, cut out
// by the explicit rays rho_0..rho_{n+1}. C1 and C2 are the fibre/section
// cycles generating the curve lattice, C3 = a_t C1 + C2 the positive section
// class.
struct KleinschmidtData {
  long s = 0, t = 0;
  std::vector<long> a;  // ascending, nonnegative
  std::vector<long> b;  // b_i = a_t - a_i (i < t), b_t = a_t
  Fan fan;
  Relation C1, C2, C3;
  int sigma_tn1 = -1;  // the cone omitting rho_t and rho_{n+1}
};

KleinschmidtData kleinschmidt_build(long s, long t, const std::vector<long>& a);

struct Rank2Positivity {
  Int A, B;  // class coordinates in the basis [D_t], [D_{n+1}]
  bool nef = false, ample = false, big = false;
};

// Closed-form rank-2 positivity: nef iff A >= 0 and B >= A a_t, ample iff
// strict, big iff A B > 0.
Rank2Positivity positivity_rank2(const KleinschmidtData& K, const TDivisor& D);

struct EssConstant {
  Int value;
  Relation cls;         // C3, or C1+C3 when some b_i vanishes
  bool used_c1_plus_c3 = false;
};

// Generic approximation constant at the unit point for big nef divisors,
// with the achieving very free class; verified on the spot against the
// very_free sieve over positive relations with coefficients <= 6.
EssConstant ess_constant(const KleinschmidtData& K, const TDivisor& D);

}  // namespace toric
