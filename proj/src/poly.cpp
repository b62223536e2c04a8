#include "toric/poly.hpp"

namespace toric {

Rat HPoly::eval(const Rat& u, const Rat& v) const {
  if (is_zero()) return Rat(0);
  std::vector<Rat> vpow((std::size_t)deg + 1);
  vpow[0] = 1;
  for (long j = 1; j <= deg; ++j) vpow[(std::size_t)j] = vpow[(std::size_t)j - 1] * v;
  Rat out = 0, upow = 1;
  for (long k = 0; k <= deg; ++k) {
    if (coeffs[(std::size_t)k] != 0)
      out += coeffs[(std::size_t)k] * upow * vpow[(std::size_t)(deg - k)];
    if (k < deg) upow *= u;
  }
  return out;
}

HPoly mul(const HPoly& a, const HPoly& b) {
  if (a.is_zero() || b.is_zero()) return HPoly::zero();
  HPoly out;
  out.deg = a.deg + b.deg;
  out.coeffs.assign((std::size_t)out.deg + 1, Rat(0));
  for (long i = 0; i <= a.deg; ++i) {
    if (a.coeffs[(std::size_t)i] == 0) continue;
    for (long j = 0; j <= b.deg; ++j)
      out.coeffs[(std::size_t)(i + j)] +=
          a.coeffs[(std::size_t)i] * b.coeffs[(std::size_t)j];
  }
  bool all_zero = true;
  for (const auto& c : out.coeffs)
    if (c != 0) all_zero = false;
  if (all_zero) return HPoly::zero();
  return out;
}

HPoly add(const HPoly& a, const HPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.deg != b.deg) fail(ErrorCode::Internal, "adding mixed degrees");
  HPoly out = a;
  bool all_zero = true;
  for (long k = 0; k <= a.deg; ++k) {
    out.coeffs[(std::size_t)k] += b.coeffs[(std::size_t)k];
    if (out.coeffs[(std::size_t)k] != 0) all_zero = false;
  }
  if (all_zero) return HPoly::zero();
  return out;
}

HPoly scale(const HPoly& a, const Rat& c) {
  if (c == 0 || a.is_zero()) return HPoly::zero();
  HPoly out = a;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

namespace {

// univariate view: strip powers of u and v, then Euclid on the dehomogenized
// part in the variable u.
struct Split {
  long v_pow = 0, u_pow = 0;
  std::vector<Rat> core;  // core[k] coeff of u^k, nonzero ends
};

Split split(const HPoly& p) {
  Split s;
  long lo = 0;
  while (lo <= p.deg && p.coeffs[(std::size_t)lo] == 0) ++lo;
  long hi = p.deg;
  while (hi >= lo && p.coeffs[(std::size_t)hi] == 0) --hi;
  s.u_pow = lo;
  s.v_pow = p.deg - hi;
  for (long k = lo; k <= hi; ++k) s.core.push_back(p.coeffs[(std::size_t)k]);
  return s;
}

std::vector<Rat> uni_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

std::vector<Rat> uni_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  while (!b.empty()) {
    auto r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

HPoly hpoly_gcd(const HPoly& a, const HPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Split sa = split(a), sb = split(b);
  long u_pow = std::min(sa.u_pow, sb.u_pow);
  long v_pow = std::min(sa.v_pow, sb.v_pow);
  std::vector<Rat> core = uni_gcd(sa.core, sb.core);
  HPoly out;
  out.deg = u_pow + v_pow + (long)core.size() - 1;
  out.coeffs.assign((std::size_t)out.deg + 1, Rat(0));
  for (std::size_t k = 0; k < core.size(); ++k)
    out.coeffs[(std::size_t)u_pow + k] = core[k];
  return out;
}

HPoly hpoly_det(const std::vector<std::vector<HPoly>>& M) {
  const std::size_t n = M.size();
  if (n == 1) return M[0][0];
  HPoly out = HPoly::zero();
  bool first_term = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (M[0][j].is_zero()) continue;
    std::vector<std::vector<HPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<HPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(M[i][k]);
      minor.push_back(std::move(row));
    }
    HPoly term = mul(M[0][j], hpoly_det(minor));
    if (j % 2 == 1) term = scale(term, Rat(-1));
    if (term.is_zero()) continue;
    if (first_term && out.is_zero()) {
      out = term;
      first_term = false;
    } else {
      out = add(out, term);
    }
  }
  return out;
}

}  // namespace toric
