#include "toric/numeric.hpp"

#include <cmath>
#include <sstream>

namespace toric {

namespace {

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Pollard rho (Brent variant) for cofactors surviving trial division.
Int pollard_rho(const Int& n, unsigned long c0) {
  Int x(2), y(2), d(1), c(c0);
  auto step = [&](Int v) { return Int((v * v + c) % n); };
  while (d == 1) {
    x = step(x);
    y = step(step(y));
    d = int_gcd(int_abs(x - y), n);
  }
  return d;
}

void factor_into(Int n, std::map<Int, long>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = n;
  for (unsigned long c = 1; d == n || d == 1; ++c) d = pollard_rho(n, c);
  factor_into(d, out);
  factor_into(Int(n / d), out);
}

}  // namespace

std::map<Int, long> factorize(const Int& x) {
  if (x == 0) fail(ErrorCode::BadInput, "factorize(0)");
  std::map<Int, long> out;
  Int n = int_abs(x);
  if (n < (Int(1) << 40)) {
    long v = n.get_si();
    for (long p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
      while (v % p == 0) {
        out[Int(p)] += 1;
        v /= p;
      }
    }
    if (v > 1) out[Int(v)] += 1;
    return out;
  }
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L,
                 41L, 43L, 47L}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), (unsigned long)p)) {
      out[Int(p)] += 1;
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), (unsigned long)p);
    }
  }
  Int p(49);
  // wheel over 6k±1 up to 2^20, then rho
  for (Int q(53); n > 1 && q * q <= n && q < (1 << 20);) {
    while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
      out[q] += 1;
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
    }
    q += (q % 6 == 5) ? 2 : 4;
  }
  if (n > 1) {
    if (n < Int(1) << 40 && is_probable_prime(n))
      out[n] += 1;
    else
      factor_into(n, out);
  }
  (void)p;
  return out;
}

long double log_rat(const Rat& x) {
  if (x <= 0) fail(ErrorCode::BadInput, "log of non-positive rational");
  auto log_int = [](const Int& z) -> long double {
    std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
    long shift = bits > 62 ? long(bits) - 62 : 0;
    Int top = z >> shift;
    return std::log((long double)top.get_d()) +
           (long double)shift * 0.6931471805599453094L;
  };
  return log_int(rat_num(x)) - log_int(rat_den(x));
}

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string rat_to_decimal(const Rat& x, int digits) {
  bool neg = x < 0;
  Rat a = rat_abs(x);
  Int scale = int_pow(Int(10), (unsigned long)digits);
  Int scaled;
  // round half away from zero
  Rat t = a * scale;
  mpz_fdiv_q(scaled.get_mpz_t(), Int(2 * rat_num(t) + rat_den(t)).get_mpz_t(),
             Int(2 * rat_den(t)).get_mpz_t());
  Int ip = scaled / scale;
  Int fp = scaled % scale;
  std::ostringstream os;
  if (neg && (ip != 0 || fp != 0)) os << '-';
  os << ip;
  if (digits > 0) {
    std::string f = fp.get_str();
    os << '.' << std::string((std::size_t)digits - f.size(), '0') << f;
  }
  return os.str();
}

}  // namespace toric
