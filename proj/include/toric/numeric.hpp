#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

// All arithmetic in the library is exact: integers are GMP integers and
// rationals are always kept in reduced form with positive denominator
// (gmpxx canonicalizes on every operation).
using Int = mpz_class;
using Rat = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

enum class ErrorCode {
  BadInput,
  RaysNotPrimitive,
  ConeNotUnimodular,
  FacetUnpaired,
  PointNotCovered,
  NotSmoothComplete,
  NotGloballyGenerated,
  NotNefOrBig,
  NotBigNef,
  NoCPC,
  NotAmple,
  HypothesisStarFails,
  IsProjectiveSpace,
  NotPositive,
  GenericityFailure,
  CurveMissesQ0,
  ZeroParameter,
  NotInTorus,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline Int rat_num(const Rat& x) { return Int(x.get_num()); }
inline Int rat_den(const Rat& x) { return Int(x.get_den()); }

// gmpxx does not canonicalize two-argument constructions; every fraction
// built from runtime values must go through here.
inline Rat frac(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}
inline Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }
inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// x^e for integer e (negative allowed when x != 0).
inline Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? x : Rat(1) / x;
  unsigned long k = e > 0 ? (unsigned long)e : (unsigned long)(-e);
  Rat num = int_pow(rat_num(b), k);
  Rat den = int_pow(rat_den(b), k);
  return num / den;
}

// p-adic valuation of a nonzero integer.
inline long padic_valuation(const Int& x, const Int& p) {
  if (x == 0) fail(ErrorCode::BadInput, "valuation of zero");
  Int r = int_abs(x);
  long v = 0;
  Int q, rem;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    if (rem != 0) break;
    r = q;
    ++v;
  }
  return v;
}

inline long padic_valuation(const Rat& x, const Int& p) {
  return padic_valuation(rat_num(x), p) - padic_valuation(rat_den(x), p);
}

// prime -> multiplicity for |x|; trial division plus Pollard rho, so lifting
// stays exact for the occasional large cofactor from curve evaluations.
std::map<Int, long> factorize(const Int& x);

// Natural log of a positive rational through its mantissa/exponent split;
// used only for slope regressions, never for any exact assertion.
long double log_rat(const Rat& x);

// Deterministic 64-bit generator (splitmix64); identical streams on every
// platform, unlike std::uniform_int_distribution.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + long(next() % (std::uint64_t)(hi - lo + 1));
  }

private:
  std::uint64_t state_;
};

std::string rat_to_string(const Rat& x);
std::string rat_to_decimal(const Rat& x, int digits = 6);

}  // namespace toric

namespace Eigen {

template <>
struct NumTraits<toric::Int> : GenericNumTraits<toric::Int> {
  typedef toric::Int Real;
  typedef toric::Int NonInteger;
  typedef toric::Int Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<toric::Rat> : GenericNumTraits<toric::Rat> {
  typedef toric::Rat Real;
  typedef toric::Rat NonInteger;
  typedef toric::Rat Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
