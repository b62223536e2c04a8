#pragma once

#include "toric/fan.hpp"

#include <vector>

namespace toric {

// Torus-invariant divisor: one integer coefficient per boundary divisor,
// aligned with the fan's ray order.
struct TDivisor {
  IntVector coeffs;
};

TDivisor anticanonical(const Fan& fan);  // all coefficients 1
TDivisor zero_divisor(const Fan& fan);

// An integer relation sum c_i rho_i = 0 between rays; doubles as a curve
// class via the intersection pairing.
struct Relation {
  IntVector coeffs;

  bool is_positive() const {
    for (int i = 0; i < coeffs.size(); ++i)
      if (coeffs(i) < 0) return false;
    return true;
  }
  bool is_zero() const { return coeffs.isZero(); }
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < coeffs.size(); ++i)
      if (coeffs(i) != 0) s.push_back(i);
    return s;
  }
  Int total() const { return coeffs.sum(); }
};

Relation make_relation(const Fan& fan, IntVector coeffs);  // checks G*c = 0

// Canonical coordinates on Pic(X) = Z^(rays)/im(h), fixed by the HNF of the
// transposed ray matrix so classes are reproducible across runs. The same
// elimination hands back the saturated curve-class lattice ker(g).
struct PicBasis {
  int r = 0;
  IntMatrix class_map;    // r x (n+r): class(x) = class_map * x
  IntMatrix curve_basis;  // r rows spanning ker(g) = A_1(X)
};

PicBasis pic_basis(const Fan& fan);

IntVector divisor_class(const PicBasis& pic, const TDivisor& D);

// Per-cone generators m_D(sigma) of the piecewise linear function phi_D.
struct SupportFunction {
  std::vector<IntVector> m_sigma;  // one element of M per maximal cone
};

SupportFunction support_function(const Fan& fan, const TDivisor& D);

// phi_D at a lattice point (exact; the value at a ray rho_i is -a_i).
Int phi_value(const Fan& fan, const SupportFunction& sf, const IntVector& v);
Rat phi_value(const Fan& fan, const SupportFunction& sf, const RatVector& v);

// O_X(D)-degree of a relation, computed through phi_D and cross-checked
// against the direct pairing sum c_i a_i.
Int deg_relation(const Fan& fan, const TDivisor& D, const Relation& P);

// Effective representative D(sigma) = D + sum <m_D(sigma),rho_i> D_i, zero on
// sigma(1). Throws NotGloballyGenerated when a coefficient is negative.
TDivisor d_sigma(const Fan& fan, const TDivisor& D, int sigma);

}  // namespace toric
