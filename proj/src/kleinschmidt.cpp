#include "toric/kleinschmidt.hpp"

#include <algorithm>

namespace toric {

KleinschmidtData kleinschmidt_build(long s, long t, const std::vector<long>& a) {
  if (s < 1 || t < 1 || (long)a.size() != t)
    fail(ErrorCode::BadInput, "need s,t >= 1 and one twist per fibre factor");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || (i > 0 && a[i] < a[i - 1]))
      fail(ErrorCode::BadInput, "twists must be ascending and nonnegative");
  }
  const long n = s + t;
  const int m = (int)n + 2;

  IntMatrix rays = IntMatrix::Zero((int)n, m);
  for (long i = 1; i <= n; ++i) rays((int)i - 1, (int)i) = 1;  // rho_i = e_i
  for (long i = 1; i <= t; ++i) rays((int)i - 1, 0) = -1;      // rho_0
  for (long j = 1; j <= s; ++j) rays((int)(t + j) - 1, m - 1) = -1;
  for (long i = 1; i <= t; ++i) rays((int)i - 1, m - 1) = a[(std::size_t)i - 1];

  std::vector<std::vector<int>> cones;
  int sigma_tn1 = -1;
  for (long i = 0; i <= t; ++i) {
    for (long j = 1; j <= s + 1; ++j) {
      std::vector<int> c;
      for (long k = 0; k <= t; ++k)
        if (k != i) c.push_back((int)k);
      for (long k = t + 1; k <= n + 1; ++k)
        if (k != t + j) c.push_back((int)k);
      if (i == t && t + j == n + 1) sigma_tn1 = (int)cones.size();
      cones.push_back(std::move(c));
    }
  }

  KleinschmidtData K{s,
                     t,
                     a,
                     {},
                     Fan((int)n, std::move(rays), std::move(cones)),
                     {},
                     {},
                     {},
                     sigma_tn1};
  K.b.resize((std::size_t)t);
  for (long i = 1; i < t; ++i) K.b[(std::size_t)i - 1] = a[(std::size_t)t - 1] - a[(std::size_t)i - 1];
  K.b[(std::size_t)t - 1] = a[(std::size_t)t - 1];

  IntVector c1 = IntVector::Zero(m);
  for (long i = 0; i <= t; ++i) c1((int)i) = 1;
  IntVector c2 = IntVector::Zero(m);
  for (long j = 1; j <= s + 1; ++j) c2((int)(t + j)) = 1;
  for (long i = 1; i <= t; ++i) c2((int)i) = -a[(std::size_t)i - 1];
  K.C1 = make_relation(K.fan, std::move(c1));
  K.C2 = make_relation(K.fan, std::move(c2));
  K.C3 = make_relation(K.fan,
                       IntVector(Int(a[(std::size_t)t - 1]) * K.C1.coeffs + K.C2.coeffs));
  if (!K.C3.is_positive()) fail(ErrorCode::Internal, "C3 must be positive");

  ValidationReport rep = validate(K.fan);
  if (!rep.ok()) fail(ErrorCode::Internal, "generated fan failed validation");
  return K;
}

Rank2Positivity positivity_rank2(const KleinschmidtData& K, const TDivisor& D) {
  if ((int)D.coeffs.size() != K.fan.num_rays())
    fail(ErrorCode::BadInput, "divisor length mismatch");
  const long t = K.t, s = K.s, n = K.s + K.t;
  Rank2Positivity rep;
  rep.A = 0;
  for (long i = 0; i <= t; ++i) rep.A += D.coeffs((int)i);
  rep.B = Int(K.a[(std::size_t)t - 1]) * D.coeffs(0) + D.coeffs((int)n + 1);
  for (long i = 1; i < t; ++i)
    rep.B += Int(K.a[(std::size_t)t - 1] - K.a[(std::size_t)i - 1]) * D.coeffs((int)i);
  for (long j = 1; j <= s; ++j) rep.B += D.coeffs((int)(t + j));
  Int at(K.a[(std::size_t)t - 1]);
  rep.nef = rep.A >= 0 && rep.B >= rep.A * at;
  rep.ample = rep.A > 0 && rep.B > rep.A * at;
  rep.big = rep.A > 0 && rep.B > 0;
  return rep;
}

EssConstant ess_constant(const KleinschmidtData& K, const TDivisor& D) {
  Rank2Positivity pos = positivity_rank2(K, D);
  if (!pos.big || !pos.nef)
    fail(ErrorCode::NotBigNef, "essential constant needs a big nef divisor");

  bool all_b_nonzero = true;
  for (long bi : K.b)
    if (bi == 0) all_b_nonzero = false;

  EssConstant out;
  Int deg3 = deg_relation(K.fan, D, K.C3);
  if (all_b_nonzero) {
    out.value = deg3;
    out.cls = K.C3;
    out.used_c1_plus_c3 = false;
  } else {
    out.value = deg_relation(K.fan, D, K.C1) + deg3;
    out.cls = make_relation(K.fan, IntVector(K.C1.coeffs + K.C3.coeffs));
    out.used_c1_plus_c3 = true;
  }

  // the achieving class must move in very free curves and realize the
  // minimal very-free degree within the coefficient-6 window
  if (!very_free(K.fan, out.cls))
    fail(ErrorCode::Internal, "achieving class is not very free");
  bool found_min = false;
  Int sieve_min = 0;
  for (const Relation& c : enumerate_positive_relations(K.fan, 6)) {
    if (!very_free(K.fan, c)) continue;
    Int d = deg_relation(K.fan, D, c);
    if (!found_min || d < sieve_min) {
      sieve_min = d;
      found_min = true;
    }
  }
  if (!found_min || sieve_min != out.value)
    fail(ErrorCode::Internal,
         "closed form disagrees with the very-free degree sieve");
  return out;
}

}  // namespace toric
