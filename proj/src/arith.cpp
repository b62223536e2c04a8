#include "toric/arith.hpp"

namespace toric {

Rat abs_place(const Rat& x, const Place& place) {
  if (x == 0) return Rat(0);
  if (place.infinite) return rat_abs(x);
  long v = padic_valuation(x, place.p);
  Rat pv(int_pow(place.p, (unsigned long)(v < 0 ? -v : v)));
  return v >= 0 ? Rat(1) / pv : pv;
}

RationalPoint unit_point(const Fan& fan, int chart) {
  RationalPoint P;
  P.chart = chart;
  P.y = RatVector::Constant(fan.dim(), Rat(1));
  return P;
}

bool is_unit_point(const RationalPoint& P) {
  for (int i = 0; i < P.y.size(); ++i)
    if (P.y(i) != 1) return false;
  return true;
}

IntMatrix chart_exponents(const Fan& fan, int chart) {
  return fan.cone_dual(chart) * fan.ray_matrix();
}

namespace {

void check_in_torus(const Fan& fan, const RationalPoint& P) {
  if (P.chart < 0 || P.chart >= fan.num_cones())
    fail(ErrorCode::BadInput, "bad chart index");
  if ((int)P.y.size() != fan.dim())
    fail(ErrorCode::BadInput, "bad point dimension");
  for (int i = 0; i < P.y.size(); ++i)
    if (P.y(i) == 0) fail(ErrorCode::NotInTorus, "coordinate vanishes");
}

}  // namespace

CoordinateValuations coordinate_valuations(const Rat& y) {
  if (y == 0) fail(ErrorCode::NotInTorus, "coordinate vanishes");
  CoordinateValuations out;
  Int num = int_abs(rat_num(y));
  if (num != 1)
    for (auto& [p, e] : factorize(num)) out.primes.push_back({p, e});
  Int den = rat_den(y);
  if (den != 1)
    for (auto& [p, e] : factorize(den)) out.primes.push_back({p, -e});
  return out;
}

const IntVector& lift_magnitudes(const Fan& fan, int chart,
                                 const std::vector<const CoordinateValuations*>& coords,
                                 LiftScratch& sc) {
  const int n = fan.dim();
  const auto& inside = fan.cone(chart);
  // merge: prime -> u_p accumulated in N
  sc.ups_used = 0;
  for (int i = 0; i < n; ++i) {
    for (const auto& [p, v] : coords[(std::size_t)i]->primes) {
      IntVector* u = nullptr;
      for (int k = 0; k < sc.ups_used; ++k)
        if (sc.ups[(std::size_t)k].first == p) {
          u = &sc.ups[(std::size_t)k].second;
          break;
        }
      if (!u) {
        if ((int)sc.ups.size() == sc.ups_used)
          sc.ups.push_back({p, IntVector::Zero(n)});
        auto& slot = sc.ups[(std::size_t)sc.ups_used++];
        slot.first = p;
        for (int k = 0; k < n; ++k) slot.second(k) = 0;
        u = &slot.second;
      }
      for (int k = 0; k < n; ++k) {
        const Int& ray_k = fan.ray_matrix()(k, inside[i]);
        if (v > 0)
          mpz_addmul_ui((*u)(k).get_mpz_t(), ray_k.get_mpz_t(), (unsigned long)v);
        else
          mpz_submul_ui((*u)(k).get_mpz_t(), ray_k.get_mpz_t(), (unsigned long)(-v));
      }
    }
  }
  if (sc.X.size() != fan.num_rays()) sc.X.resize(fan.num_rays());
  for (int i = 0; i < fan.num_rays(); ++i) sc.X(i) = 1;
  for (int pi = 0; pi < sc.ups_used; ++pi) {
    auto& [p, u] = sc.ups[(std::size_t)pi];
    if (u.isZero()) continue;
    int s = locate_cone_lattice(fan, u, sc.cone_coords);
    const auto& cone = fan.cone(s);
    for (int k = 0; k < n; ++k) {
      if (sc.cone_coords(k) == 0) continue;
      if (sc.cone_coords(k) < 0)
        fail(ErrorCode::Internal, "negative lift exponent");
      mpz_pow_ui(sc.power.get_mpz_t(), p.get_mpz_t(), sc.cone_coords(k).get_ui());
      sc.X(cone[k]) *= sc.power;
    }
  }
  return sc.X;
}

IntVector lift_magnitudes(const Fan& fan, int chart,
                          const std::vector<const CoordinateValuations*>& coords) {
  LiftScratch sc;
  return lift_magnitudes(fan, chart, coords, sc);
}

IntVector cox_lift_magnitudes(const Fan& fan, const RationalPoint& P) {
  fan.require_smooth_complete();
  check_in_torus(fan, P);
  std::vector<CoordinateValuations> vals;
  vals.reserve((std::size_t)fan.dim());
  for (int i = 0; i < fan.dim(); ++i)
    vals.push_back(coordinate_valuations(P.y(i)));
  std::vector<const CoordinateValuations*> ptrs;
  for (const auto& v : vals) ptrs.push_back(&v);
  return lift_magnitudes(fan, P.chart, ptrs);
}

CoxPoint cox_lift(const Fan& fan, const RationalPoint& P) {
  IntVector mags = cox_lift_magnitudes(fan, P);
  const int m = fan.num_rays();
  const int n = fan.dim();
  IntMatrix E = chart_exponents(fan, P.chart);

  // parity data: sign(y_i) and E mod 2
  std::vector<int> target((std::size_t)n);
  for (int i = 0; i < n; ++i) target[(std::size_t)i] = P.y(i) < 0 ? 1 : 0;
  std::vector<std::vector<int>> par((std::size_t)n, std::vector<int>((std::size_t)m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      par[(std::size_t)i][(std::size_t)j] =
          mpz_odd_p(E(i, j).get_mpz_t()) ? 1 : 0;

  if (m > 30) fail(ErrorCode::BadInput, "too many rays for sign search");
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int parity = 0;
      for (int j = 0; j < m; ++j)
        if ((mask >> (m - 1 - j)) & 1) parity ^= par[(std::size_t)i][(std::size_t)j];
      if (parity != target[(std::size_t)i]) ok = false;
    }
    if (!ok) continue;
    CoxPoint out;
    out.chart = P.chart;
    out.X = mags;
    for (int j = 0; j < m; ++j)
      if ((mask >> (m - 1 - j)) & 1) out.X(j) = -out.X(j);
    return out;
  }
  fail(ErrorCode::Internal, "no sign vector reproduces the point");
}

HeightTable height_table(const Fan& fan, const TDivisor& D) {
  fan.require_smooth_complete();
  HeightTable t;
  for (int s = 0; s < fan.num_cones(); ++s) {
    t.exponents.push_back(d_sigma(fan, D, s).coeffs);  // throws when not g.g.
    std::vector<unsigned long> ui;
    for (int i = 0; i < fan.num_rays(); ++i)
      ui.push_back(t.exponents.back()(i).get_ui());
    t.expo_ui.push_back(std::move(ui));
  }
  return t;
}

Rat height_from_magnitudes(const HeightTable& table, const IntVector& X) {
  Int best = 0, acc, power;
  for (const auto& expo : table.expo_ui) {
    acc = 1;
    for (std::size_t i = 0; i < expo.size(); ++i) {
      if (expo[i] == 0) continue;
      if (expo[i] == 1) {
        acc *= X((int)i);
      } else {
        mpz_pow_ui(power.get_mpz_t(), X((int)i).get_mpz_t(), expo[i]);
        acc *= power;
      }
    }
    mpz_abs(acc.get_mpz_t(), acc.get_mpz_t());
    if (acc > best) best = acc;
  }
  return Rat(best);
}

Rat salberger_height(const Fan& fan, const HeightTable& table,
                     const RationalPoint& P) {
  return height_from_magnitudes(table, cox_lift_magnitudes(fan, P));
}

Rat salberger_height(const Fan& fan, const TDivisor& D,
                     const RationalPoint& P) {
  return salberger_height(fan, height_table(fan, D), P);
}

Rat monomial_height(const Fan& fan, const TDivisor& D, const RationalPoint& P,
                    int sigma) {
  IntVector X = cox_lift_magnitudes(fan, P);
  IntVector expo = d_sigma(fan, D, sigma).coeffs;
  Int acc = 1, power;
  for (int i = 0; i < X.size(); ++i) {
    if (expo(i) == 0) continue;
    mpz_pow_ui(power.get_mpz_t(), X(i).get_mpz_t(), expo(i).get_ui());
    acc *= power;
  }
  mpz_abs(acc.get_mpz_t(), acc.get_mpz_t());
  return Rat(acc);
}

Rat distance(const RationalPoint& P, const Place& place) {
  Rat best = 0;
  for (int i = 0; i < P.y.size(); ++i) {
    Rat v = abs_place(P.y(i) - 1, place);
    if (v > best) best = v;
  }
  return best > 1 ? Rat(1) : best;
}

}  // namespace toric
