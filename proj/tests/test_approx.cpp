#include <doctest.h>

#include "toric/approx.hpp"
#include "toric/corpus.hpp"

#include <cmath>

using namespace toric;

TEST_SUITE("approx") {
  TEST_CASE("slope of a line in p2 under the hyperplane class") {
    Fan p2 = make_projective_space(2);
    TDivisor D = zero_divisor(p2);
    D.coeffs(2) = 1;
    RatVector m(2);
    m << Rat(1), Rat(2);
    Schedule sched;
    sched.count = 18;
    SlopeEstimate est = estimate_alpha_on_curve(p2, D, general_line(p2, 0, m),
                                                Place::inf(), sched);
    CHECK(std::abs(est.gamma_hat - 1.0) < 0.03);
  }

  TEST_CASE("slopes on s7: centred line 2, general line 3") {
    Fan s7 = make_s7();
    TDivisor mk = anticanonical(s7);
    AccumulatingLocus locus = accumulating_locus(s7, mk);
    Schedule sched;
    sched.count = 20;
    RatVector m = RatVector::Zero(2);
    m(locus.components[0].free_coords[0]) = 1;
    SlopeEstimate cpc = estimate_alpha_on_curve(
        s7, mk, line_through_unit(s7, locus.sigma0, m), Place::inf(), sched);
    CHECK(std::abs(cpc.gamma_hat - 2.0) < 0.06);
    RatVector g(2);
    g << Rat(1), Rat(2);
    SlopeEstimate gen = estimate_alpha_on_curve(
        s7, mk, general_line(s7, locus.sigma0, g), Place::inf(), sched);
    CHECK(std::abs(gen.gamma_hat - 3.0) < 0.09);
  }

  TEST_CASE("reparametrized curves give the same slope from either end") {
    Fan s7 = make_s7();
    TDivisor mk = anticanonical(s7);
    auto star = star_witness(s7);
    RatVector m(2);
    m << Rat(1), Rat(2);
    CurveFamily fam = general_line(s7, star->sigma0, m);
    Schedule down;  // t -> 0
    down.count = 18;
    Schedule up;  // t -> infinity on the swapped parametrization
    up.t0 = Rat(2);
    up.ratio = Rat(2);
    up.count = 18;
    SlopeEstimate a = estimate_alpha_on_curve(s7, mk, fam, Place::inf(), down);
    SlopeEstimate b = estimate_alpha_on_curve(s7, mk, fam.reparametrized(),
                                              Place::inf(), up);
    CHECK(std::abs(a.gamma_hat - b.gamma_hat) < 0.05);
  }

  TEST_CASE("a curve missing the unit point is rejected") {
    Fan p2 = make_projective_space(2);
    TDivisor D = zero_divisor(p2);
    D.coeffs(2) = 1;
    RatVector m(2);
    m << Rat(1), Rat(2);
    CurveFamily fam = general_line(p2, 0, m);
    fam.polys[0] = mul(fam.polys[0], HPoly::constant(Rat(3)));  // detunes Q0
    CHECK_THROWS_AS(
        estimate_alpha_on_curve(p2, D, fam, Place::inf(), Schedule{}), Error);
  }

  TEST_CASE("liouville search on s7 with the chart monomial height") {
    Fan s7 = make_s7();
    TDivisor mk = anticanonical(s7);
    AccumulatingLocus locus = accumulating_locus(s7, mk);
    SearchOptions o;
    o.chart = locus.sigma0;
    o.mode = HeightMode::ChartMonomial;
    o.monomial_chart = locus.sigma0;
    o.jobs = 2;
    SearchMin m2 = liouville_search(s7, mk, Rat(2), 10, nullptr, Place::inf(), o);
    REQUIRE(m2.any);
    CHECK(value_at_least_one(m2.dist, m2.height, Rat(2)));
    SearchMin m3 = liouville_search(s7, mk, Rat(3), 10, &locus, Place::inf(), o);
    REQUIRE(m3.any);
    CHECK(value_at_least_one(m3.dist, m3.height, Rat(3)));
    // on-locus points are really excluded: the argmin has both coords != 1
    for (int i = 0; i < 2; ++i) CHECK(m3.argmin(i) != 1);
  }

  TEST_CASE("search minima are monotone in the box and scan-order free") {
    Fan p2 = make_projective_space(2);
    TDivisor D = zero_divisor(p2);
    D.coeffs(2) = 1;
    SearchOptions o;
    o.chart = 0;
    o.jobs = 1;
    SearchMin small = liouville_search(p2, D, Rat(1), 5, nullptr, Place::inf(), o);
    SearchMin big = liouville_search(p2, D, Rat(1), 10, nullptr, Place::inf(), o);
    REQUIRE(small.any);
    REQUIRE(big.any);
    CHECK(compare_search_values(big.dist, big.height, small.dist, small.height,
                                Rat(1)) <= 0);
    SearchOptions par = o;
    par.jobs = 4;
    SearchMin big_par =
        liouville_search(p2, D, Rat(1), 10, nullptr, Place::inf(), par);
    CHECK(big_par.dist == big.dist);
    CHECK(big_par.height == big.height);
    CHECK(big_par.argmin == big.argmin);
  }

  TEST_CASE("search rows match the independent module evaluations") {
    Fan s7 = make_s7();
    TDivisor mk = anticanonical(s7);
    auto star = star_witness(s7);
    SearchOptions o;
    o.chart = star->sigma0;
    o.jobs = 1;
    std::vector<SearchRow> rows;
    liouville_search(s7, mk, Rat(2), 3, nullptr, Place::inf(), o, &rows);
    HeightTable table = height_table(s7, mk);
    REQUIRE(!rows.empty());
    for (const auto& row : rows) {
      RationalPoint P;
      P.chart = star->sigma0;
      P.y = row.y;
      CHECK(distance(P, Place::inf()) == row.dist);
      CHECK(salberger_height(s7, table, P) == row.height);
    }
  }

  TEST_CASE("accumulation verification passes on s7 and f1") {
    Fan s7 = make_s7();
    TDivisor mk = anticanonical(s7);
    AccumulatingLocus locus = accumulating_locus(s7, mk);
    SearchOptions o;
    o.chart = locus.sigma0;
    o.jobs = 2;
    AccumulationReport rep =
        verify_accumulation(s7, mk, locus, 12, Place::inf(), o);
    CHECK(rep.pass);
    REQUIRE(rep.off_locus.size() == 3);
    CHECK(rep.off_locus[2].delta == Rat(1));
    CHECK(rep.off_locus[2].pass);

    KleinschmidtData f1 = kleinschmidt_build(1, 1, {1});
    TDivisor mk1 = anticanonical(f1.fan);
    AccumulatingLocus locus1 = accumulating_locus(f1.fan, mk1);
    SearchOptions o1;
    o1.chart = locus1.sigma0;
    o1.jobs = 2;
    AccumulationReport rep1 =
        verify_accumulation(f1.fan, mk1, locus1, 8, Place::inf(), o1);
    CHECK(rep1.pass);
    CHECK(rep1.off_locus[2].pass);
  }

  TEST_CASE("liouville minima exist at finite places too") {
    Fan s7 = make_s7();
    TDivisor mk = anticanonical(s7);
    auto star = star_witness(s7);
    SearchOptions o;
    o.chart = star->sigma0;
    o.jobs = 1;
    SearchMin m = liouville_search(s7, mk, Rat(2), 4, nullptr, Place::prime(3), o);
    CHECK(m.any);
    CHECK(m.dist > 0);
  }
}
