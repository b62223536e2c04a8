#include <doctest.h>

#include "toric/arith.hpp"
#include "toric/collections.hpp"
#include "toric/corpus.hpp"
#include "toric/curves.hpp"

#include <algorithm>
#include <set>

using namespace toric;

namespace {

std::set<std::vector<long>> to_set(const std::vector<Relation>& rels) {
  std::set<std::vector<long>> out;
  for (const auto& r : rels) {
    std::vector<long> v;
    for (int i = 0; i < r.coeffs.size(); ++i) v.push_back(r.coeffs(i).get_si());
    out.insert(std::move(v));
  }
  return out;
}

}  // namespace

TEST_SUITE("curves") {
  TEST_CASE("positive relations of p2 up to coefficient 3") {
    Fan p2 = make_projective_space(2);
    auto rels = to_set(enumerate_positive_relations(p2, 3));
    std::set<std::vector<long>> expect = {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}};
    CHECK(rels == expect);
  }

  TEST_CASE("positive relations of f1 are the p C1 + q C2 with p >= q") {
    KleinschmidtData f1 = kleinschmidt_build(1, 1, {1});
    auto rels = enumerate_positive_relations(f1.fan, 2);
    std::set<std::vector<long>> expect;
    for (long p = 0; p <= 4; ++p)
      for (long q = 0; q <= 4; ++q) {
        if (p + q == 0 || p < q) continue;
        IntVector c = Int(p) * f1.C1.coeffs + Int(q) * f1.C2.coeffs;
        bool in_box = true;
        for (int i = 0; i < c.size(); ++i)
          if (c(i) < 0 || c(i) > 2) in_box = false;
        if (!in_box) continue;
        std::vector<long> v;
        for (int i = 0; i < c.size(); ++i) v.push_back(c(i).get_si());
        expect.insert(std::move(v));
      }
    CHECK(to_set(rels) == expect);
  }

  TEST_CASE("minimal positive degree on s7 equals beta") {
    Fan s7 = make_s7();
    TDivisor mk = anticanonical(s7);
    Int mn = 0;
    bool first = true;
    for (const Relation& c : enumerate_positive_relations(s7, 2)) {
      Int d = deg_relation(s7, mk, c);
      if (first || d < mn) {
        mn = d;
        first = false;
      }
    }
    CHECK(mn == 2);
  }

  TEST_CASE("the semigroup of positive relations is closed under addition") {
    Fan s7 = make_s7();
    auto rels = enumerate_positive_relations(s7, 4);
    auto all = to_set(rels);
    int checked = 0;
    for (std::size_t i = 0; i < rels.size() && checked < 200; ++i)
      for (std::size_t j = i; j < rels.size() && checked < 200; ++j) {
        IntVector sum = rels[i].coeffs + rels[j].coeffs;
        bool in_box = true;
        for (int k = 0; k < sum.size(); ++k)
          if (sum(k) > 4) in_box = false;
        if (!in_box) continue;
        std::vector<long> v;
        for (int k = 0; k < sum.size(); ++k) v.push_back(sum(k).get_si());
        CHECK(all.count(v) == 1);
        ++checked;
      }
  }

  TEST_CASE("very-freeness by support span") {
    Fan s7 = make_s7();
    IntVector cpc(5);
    cpc << 1, 0, 1, 0, 0;
    CHECK_FALSE(very_free(s7, make_relation(s7, cpc)));

    KleinschmidtData f0 = kleinschmidt_build(1, 1, {0});
    IntVector all1(4);
    all1 << 1, 1, 1, 1;
    CHECK(very_free(f0.fan, make_relation(f0.fan, all1)));
    // on P1 x P1 the section class C3 = C2 has parallel support: not very free
    CHECK_FALSE(very_free(f0.fan, f0.C3));
    Relation c1c3 =
        make_relation(f0.fan, IntVector(f0.C1.coeffs + f0.C3.coeffs));
    CHECK(very_free(f0.fan, c1c3));

    IntVector neg(5);
    neg << 1, 0, 1, 0, -1;
    CHECK_THROWS_AS(very_free(s7, Relation{neg}), Error);
  }

  TEST_CASE("splitting type of the p2 line") {
    Fan p2 = make_projective_space(2);
    IntVector line(3);
    line << 1, 1, 1;
    SplittingType st = splitting_type(p2, make_relation(p2, line), 42);
    CHECK(st.degrees == std::vector<long>({1, 2}));
  }

  TEST_CASE("splitting type of the s7 centred line") {
    Fan s7 = make_s7();
    IntVector cpc(5);
    cpc << 1, 0, 1, 0, 0;
    SplittingType st = splitting_type(s7, make_relation(s7, cpc), 42);
    CHECK(st.degrees == std::vector<long>({0, 2}));
    CHECK(st.mu_min() == 0);
  }

  TEST_CASE("splitting type of C3 on hirzebruch surfaces") {
    for (long a : {1L, 2L}) {
      KleinschmidtData K = kleinschmidt_build(1, 1, {a});
      SplittingType st = splitting_type(K.fan, K.C3, 7);
      std::vector<long> expect = {std::min(a, 2L), std::max(a, 2L)};
      CHECK(st.degrees == expect);
    }
  }

  TEST_CASE("splitting degrees sum to the anticanonical degree") {
    Fan s7 = make_s7();
    Rng rng(3);
    auto rels = enumerate_positive_relations(s7, 2);
    for (int k = 0; k < 6; ++k) {
      const Relation& c = rels[rng.next() % rels.size()];
      SplittingType st = splitting_type(s7, c, 100 + (std::uint64_t)k);
      CHECK(st.total() == c.total());
      CHECK(st.mu_min() >= 0);
      CHECK((st.mu_min() >= 1) == very_free(s7, c));
    }
  }

  TEST_CASE("general line classes") {
    Fan p2 = make_projective_space(2);
    RatVector m(2);
    m << Rat(2), Rat(5);
    CurveFamily fam = general_line(p2, 0, m);
    IntVector line(3);
    line << 1, 1, 1;
    CHECK(fam.cls.coeffs == line);

    Fan s7 = make_s7();
    auto star = star_witness(s7);
    REQUIRE(star.has_value());
    RatVector m2(2);
    m2 << Rat(1), Rat(3);
    CurveFamily general = general_line(s7, star->sigma0, m2);
    CHECK(deg_relation(s7, anticanonical(s7), general.cls) == 3);

    KleinschmidtData f1 = kleinschmidt_build(1, 1, {1});
    CurveFamily lf1 = general_line(f1.fan, f1.sigma_tn1, m2);
    CHECK(lf1.cls.coeffs == f1.C3.coeffs);

    KleinschmidtData f0 = kleinschmidt_build(1, 1, {0});
    CurveFamily lf0 = general_line(f0.fan, f0.sigma_tn1, m2);
    CHECK(lf0.cls.coeffs == IntVector(f0.C1.coeffs + f0.C3.coeffs));
  }

  TEST_CASE("lines reproduce their chart coordinates") {
    Fan s7 = make_s7();
    auto star = star_witness(s7);
    RatVector m(2);
    m << Rat(3, 2), Rat(-2);
    CurveFamily fam = general_line(s7, star->sigma0, m);
    IntMatrix E = chart_exponents(s7, fam.chart);
    for (Rat t : {Rat(1, 3), Rat(5, 7), Rat(-1, 2)}) {
      RatVector X(5);
      for (int j = 0; j < 5; ++j)
        X(j) = fam.polys[(std::size_t)j].eval(rat_num(t), rat_den(t));
      for (int i = 0; i < 2; ++i) {
        Rat y = 1;
        for (int j = 0; j < 5; ++j)
          if (E(i, j) != 0) y *= rat_pow(X(j), E(i, j).get_si());
        CHECK(y == m(i) * t + 1);
      }
    }
    // zero parameters are rejected for general lines but fine for cpc lines
    RatVector mz(2);
    mz << Rat(1), Rat(0);
    CHECK_THROWS_AS(general_line(s7, star->sigma0, mz), Error);
    CurveFamily cpc_line = line_through_unit(s7, star->sigma0, mz);
    CHECK(deg_relation(s7, anticanonical(s7), cpc_line.cls) == 2);
  }

  TEST_CASE("lift polynomials satisfy the coprimality condition") {
    Fan s7 = make_s7();
    auto star = star_witness(s7);
    RatVector m(2);
    m << Rat(1), Rat(2);
    CurveFamily fam = general_line(s7, star->sigma0, m);
    for (const auto& pc : primitive_collections(s7).collections) {
      HPoly g = HPoly::zero();
      for (int i : pc.rays)
        g = g.is_zero() ? fam.polys[(std::size_t)i]
                        : hpoly_gcd(g, fam.polys[(std::size_t)i]);
      CHECK(g.deg == 0);
    }
  }
}
