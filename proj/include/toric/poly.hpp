#pragma once

#include "toric/numeric.hpp"

#include <vector>

namespace toric {

// Homogeneous polynomial in (u, v); coeffs[k] multiplies u^k v^(deg-k).
// The zero polynomial is the empty coefficient vector with deg == -1.
struct HPoly {
  long deg = -1;
  std::vector<Rat> coeffs;

  static HPoly zero() { return HPoly{}; }
  static HPoly constant(const Rat& c) {
    if (c == 0) return zero();
    return HPoly{0, {c}};
  }
  // u - b v
  static HPoly linear_root(const Rat& b) { return HPoly{1, {Rat(-b), Rat(1)}}; }
  static HPoly monomial_v(long k) {  // v^k
    std::vector<Rat> c((std::size_t)k + 1, Rat(0));
    c[0] = 1;
    return HPoly{k, std::move(c)};
  }
  bool is_zero() const { return deg < 0; }
  Rat eval(const Rat& u, const Rat& v) const;
  Rat coeff(long k) const {
    return (k < 0 || k > deg) ? Rat(0) : coeffs[(std::size_t)k];
  }
};

HPoly mul(const HPoly& a, const HPoly& b);
HPoly add(const HPoly& a, const HPoly& b);  // requires equal degrees
HPoly scale(const HPoly& a, const Rat& c);

// gcd as homogeneous polynomials, monic-normalized; constants come back as 1.
HPoly hpoly_gcd(const HPoly& a, const HPoly& b);

// determinant of a square matrix of homogeneous polynomials whose rows have
// constant degree (so the result is homogeneous); cofactor expansion
HPoly hpoly_det(const std::vector<std::vector<HPoly>>& M);

}  // namespace toric
