#include <doctest.h>

#include "toric/arith.hpp"
#include "toric/collections.hpp"
#include "toric/corpus.hpp"

using namespace toric;

namespace {

RationalPoint point(const Fan&, int chart, std::vector<Rat> coords) {
  RationalPoint P;
  P.chart = chart;
  P.y = RatVector((int)coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) P.y((int)i) = coords[i];
  return P;
}

// brute-force oracle: smallest coprime integer triple reproducing the chart
// coordinates of p2
std::vector<long> p2_brute_force_lift(const Rat& y1, const Rat& y2) {
  for (long c = 1; c <= 100; ++c)
    for (long a = -100; a <= 100; ++a)
      for (long b = -100; b <= 100; ++b) {
        if (a == 0 || b == 0) continue;
        if (frac(a, c) != y1 || frac(b, c) != y2) continue;
        Int g = int_gcd(int_gcd(Int(a), Int(b)), Int(c));
        if (g == 1) return {a, b, c};
      }
  return {};
}

bool reproduces_point(const Fan& fan, const CoxPoint& lift,
                      const RationalPoint& P) {
  IntMatrix E = chart_exponents(fan, P.chart);
  for (int i = 0; i < fan.dim(); ++i) {
    Rat y = 1;
    for (int j = 0; j < fan.num_rays(); ++j) {
      long e = E(i, j).get_si();
      if (e != 0) y *= rat_pow(Rat(lift.X(j)), e);
    }
    if (y != P.y(i)) return false;
  }
  return true;
}

bool coprime_on_collections(const Fan& fan, const IntVector& X) {
  for (const auto& pc : primitive_collections(fan).collections) {
    Int g = 0;
    for (int i : pc.rays) g = int_gcd(g, X(i));
    if (g != 1) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("arith") {
  TEST_CASE("p2 lift matches the brute-force oracle") {
    Fan p2 = make_projective_space(2);
    RationalPoint P = point(p2, 2, {Rat(2, 3), Rat(4, 5)});  // chart cone(e1,e2)
    CoxPoint lift = cox_lift(p2, P);
    auto oracle = p2_brute_force_lift(Rat(2, 3), Rat(4, 5));
    REQUIRE(oracle.size() == 3);
    // lift magnitudes agree with the oracle triple as a multiset (the chart
    // convention permutes which ray carries the common denominator)
    std::vector<long> mags = {int_abs(lift.X(0)).get_si(),
                              int_abs(lift.X(1)).get_si(),
                              int_abs(lift.X(2)).get_si()};
    std::sort(mags.begin(), mags.end());
    std::vector<long> expect = {std::abs(oracle[0]), std::abs(oracle[1]),
                                std::abs(oracle[2])};
    std::sort(expect.begin(), expect.end());
    CHECK(mags == expect);
    CHECK(mags == std::vector<long>({10, 12, 15}));
    CHECK(reproduces_point(p2, lift, P));
    CHECK(coprime_on_collections(p2, lift.X));
  }

  TEST_CASE("the unit point lifts to all ones") {
    Fan s7 = make_s7();
    CoxPoint lift = cox_lift(s7, unit_point(s7, 0));
    for (int i = 0; i < 5; ++i) CHECK(lift.X(i) == 1);
  }

  TEST_CASE("s7 lifts reproduce the chart identity with signs") {
    Fan s7 = make_s7();
    auto star = star_witness(s7);
    Rng rng(9);
    for (int k = 0; k < 30; ++k) {
      std::vector<Rat> coords;
      for (int i = 0; i < 2; ++i) {
        long p = 0;
        while (p == 0) p = rng.range(-40, 40);
        coords.push_back(frac(p, rng.range(1, 40)));
      }
      RationalPoint P = point(s7, star->sigma0, coords);
      CoxPoint lift = cox_lift(s7, P);
      CHECK(reproduces_point(s7, lift, P));
      CHECK(coprime_on_collections(s7, lift.X));
      for (int i = 0; i < 5; ++i) CHECK(int_abs(lift.X(i)) >= 1);
    }
  }

  TEST_CASE("points off the torus are refused") {
    Fan p2 = make_projective_space(2);
    CHECK_THROWS_AS(cox_lift(p2, point(p2, 0, {Rat(0), Rat(1)})), Error);
  }

  TEST_CASE("salberger height on p2 equals the max coordinate") {
    Fan p2 = make_projective_space(2);
    TDivisor D = zero_divisor(p2);
    D.coeffs(2) = 1;
    RationalPoint P = point(p2, 0, {Rat(2, 3), Rat(4, 5)});
    CHECK(salberger_height(p2, D, P) == 15);
  }

  TEST_CASE("the unit point has height one for nef divisors") {
    for (const auto& entry : corpus()) {
      TDivisor mk = anticanonical(entry.fan);
      if (!positivity(entry.fan, mk).nef) continue;
      CHECK(salberger_height(entry.fan, mk, unit_point(entry.fan, 0)) == 1);
    }
  }

  TEST_CASE("height is multiplicative in the divisor exponent") {
    Fan s7 = make_s7();
    TDivisor mk = anticanonical(s7);
    TDivisor twice;
    twice.coeffs = 2 * mk.coeffs;
    Rng rng(13);
    for (int k = 0; k < 10; ++k) {
      long p1 = rng.range(1, 30), q1 = rng.range(1, 30);
      long p2v = rng.range(1, 30), q2 = rng.range(1, 30);
      RationalPoint P =
          point(s7, 0, {frac(p1, q1), frac(p2v, q2)});
      Rat h = salberger_height(s7, mk, P);
      CHECK(salberger_height(s7, twice, P) == h * h);
    }
  }

  TEST_CASE("heights ignore the sign ambiguity of the lift") {
    Fan s7 = make_s7();
    TDivisor mk = anticanonical(s7);
    HeightTable table = height_table(s7, mk);
    RationalPoint P = point(s7, 0, {Rat(-3, 7), Rat(5, 2)});
    Rat h = salberger_height(s7, table, P);
    CoxPoint lift = cox_lift(s7, P);
    // the height computed from the signed lift agrees
    Rat best = 0;
    for (const auto& expo : table.exponents) {
      Rat v = 1;
      for (int i = 0; i < 5; ++i)
        if (expo(i) != 0) v *= rat_pow(Rat(int_abs(lift.X(i))), expo(i).get_si());
      if (v > best) best = v;
    }
    CHECK(best == h);
  }

  TEST_CASE("s7 heights near the unit point follow the chart monomial") {
    Fan s7 = make_s7();
    auto star = star_witness(s7);
    TDivisor mk = anticanonical(s7);
    TDivisor rep = d_sigma(s7, mk, star->sigma0);
    // exponent pattern 2,2,3 off the chart
    std::vector<long> outside;
    for (int i = 0; i < 5; ++i)
      if (rep.coeffs(i) != 0) outside.push_back(rep.coeffs(i).get_si());
    std::sort(outside.begin(), outside.end());
    CHECK(outside == std::vector<long>({2, 2, 3}));
    // and the chart monomial dominates near the unit point
    RationalPoint P =
        point(s7, star->sigma0, {Rat(101, 100), Rat(99, 100)});
    Rat mono = monomial_height(s7, mk, P, star->sigma0);
    Rat h = salberger_height(s7, mk, P);
    CHECK(h >= mono);
    CHECK(h <= mono * 4);  // same magnitude in the unit neighbourhood
  }

  TEST_CASE("distances") {
    Fan s7 = make_s7();
    CHECK(distance(unit_point(s7, 0), Place::inf()) == 0);
    RationalPoint P = point(s7, 0, {Rat(3, 2), Rat(1)});
    CHECK(distance(P, Place::inf()) == Rat(1, 2));
    RationalPoint Q = point(s7, 0, {Rat(26), Rat(1)});
    CHECK(distance(Q, Place::prime(5)) == Rat(1, 25));
    RationalPoint far = point(s7, 0, {Rat(1000), Rat(1)});
    CHECK(distance(far, Place::inf()) == 1);  // capped at one
  }

  TEST_CASE("p-adic distance forces divisibility of the lift differences") {
    Fan s7 = make_s7();
    auto star = star_witness(s7);
    IntMatrix E = chart_exponents(s7, star->sigma0);
    for (long k : {1L, 2L, 3L}) {
      Int pk = int_pow(Int(5), (unsigned long)k);
      RationalPoint P = point(
          s7, star->sigma0,
          {Rat(1) + Rat(3 * pk), Rat(1) + frac(pk, Int(7))});
      Rat d = distance(P, Place::prime(5));
      CHECK(d == Rat(1, pk));
      CoxPoint lift = cox_lift(s7, P);
      // the coordinate attaining the distance has numerator divisible by 5^k
      for (int i = 0; i < 2; ++i) {
        if (abs_place(P.y(i) - 1, Place::prime(5)) != d) continue;
        Int num = 1, den = 1;
        for (int j = 0; j < 5; ++j) {
          long e = E(i, j).get_si();
          if (e > 0) num *= int_pow(lift.X(j), (unsigned long)e);
          if (e < 0) den *= int_pow(lift.X(j), (unsigned long)(-e));
        }
        CHECK(padic_valuation(Int(num - den), Int(5)) >= k);
      }
    }
  }
}
