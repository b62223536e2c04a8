#include <doctest.h>

#include "toric/collections.hpp"
#include "toric/corpus.hpp"
#include "toric/kleinschmidt.hpp"

using namespace toric;

TEST_SUITE("kleinschmidt") {
  TEST_CASE("f1 build: 4 rays, 4 cones, valid") {
    KleinschmidtData K = kleinschmidt_build(1, 1, {1});
    CHECK(K.fan.num_rays() == 4);
    CHECK(K.fan.num_cones() == 4);
    CHECK(validate(K.fan).ok());
    CHECK(K.C3.coeffs == IntVector(Int(1) * K.C1.coeffs + K.C2.coeffs));
  }

  TEST_CASE("p1 x p1 and the rank-3 bundle") {
    KleinschmidtData f0 = kleinschmidt_build(1, 1, {0});
    CHECK(validate(f0.fan).ok());
    CHECK(pic_basis(f0.fan).r == 2);
    KleinschmidtData K = kleinschmidt_build(2, 1, {2});
    CHECK(K.fan.dim() == 3);
    CHECK(K.fan.num_rays() == 5);
    CHECK(K.fan.num_cones() == 6);
    CHECK(validate(K.fan).ok());
    EffConeReport eff = effective_cone(K.fan);
    CHECK(eff.simplicial);
    REQUIRE(eff.sigma0.has_value());
    CHECK(eff.sigma0->sigma0 == K.sigma_tn1);
  }

  TEST_CASE("bad parameters are refused") {
    CHECK_THROWS_AS(kleinschmidt_build(0, 1, {1}), Error);
    CHECK_THROWS_AS(kleinschmidt_build(1, 2, {2, 1}), Error);
    CHECK_THROWS_AS(kleinschmidt_build(1, 1, {-1}), Error);
  }

  TEST_CASE("rank-2 positivity closed form") {
    KleinschmidtData f2 = kleinschmidt_build(1, 1, {2});
    TDivisor mk = anticanonical(f2.fan);
    Rank2Positivity pos = positivity_rank2(f2, mk);
    CHECK(pos.A == 2);
    CHECK(pos.B == 4);
    CHECK(pos.nef);
    CHECK_FALSE(pos.ample);
    CHECK(pos.big);

    KleinschmidtData f1 = kleinschmidt_build(1, 1, {1});
    Rank2Positivity p1 = positivity_rank2(f1, anticanonical(f1.fan));
    CHECK(p1.A == 2);
    CHECK(p1.B == 3);
    CHECK(p1.ample);

    // the fibre-class boundary divisor D_t: A = 1, B = 0
    TDivisor dt = zero_divisor(f2.fan);
    dt.coeffs((int)f2.t) = 1;
    Rank2Positivity pdt = positivity_rank2(f2, dt);
    CHECK(pdt.A == 1);
    CHECK(pdt.B == 0);
    CHECK_FALSE(pdt.nef);
    CHECK_FALSE(pdt.big);
  }

  TEST_CASE("closed form agrees with the generic positivity tests") {
    Rng rng(21);
    for (auto spec : {std::vector<long>{0}, {1}, {2}, {3}}) {
      KleinschmidtData K = kleinschmidt_build(1, 1, spec);
      for (int trial = 0; trial < 15; ++trial) {
        TDivisor D;
        D.coeffs = IntVector(K.fan.num_rays());
        for (int i = 0; i < K.fan.num_rays(); ++i)
          D.coeffs(i) = Int(rng.range(-3, 4));
        Rank2Positivity fast = positivity_rank2(K, D);
        PositivityReport slow = positivity(K.fan, D);
        CHECK(fast.nef == slow.nef);
        CHECK(fast.ample == slow.ample);
        CHECK(fast.big == slow.big);
      }
    }
  }

  TEST_CASE("essential constants on the hirzebruch surfaces") {
    KleinschmidtData f1 = kleinschmidt_build(1, 1, {1});
    EssConstant e1 = ess_constant(f1, anticanonical(f1.fan));
    CHECK(e1.value == 3);
    CHECK_FALSE(e1.used_c1_plus_c3);
    CHECK(e1.cls.coeffs == f1.C3.coeffs);

    KleinschmidtData f0 = kleinschmidt_build(1, 1, {0});
    EssConstant e0 = ess_constant(f0, anticanonical(f0.fan));
    CHECK(e0.value == 4);
    CHECK(e0.used_c1_plus_c3);

    KleinschmidtData f2 = kleinschmidt_build(1, 1, {2});
    EssConstant e2 = ess_constant(f2, anticanonical(f2.fan));
    CHECK(e2.value == 4);
    CHECK(e2.cls.coeffs == f2.C3.coeffs);

    KleinschmidtData k12 = kleinschmidt_build(1, 2, {0, 1});
    EssConstant e12 = ess_constant(k12, anticanonical(k12.fan));
    CHECK(e12.value == 4);

    // p2 x p1: every twist zero, so the C1 + C3 branch fires in dimension 3
    KleinschmidtData p2p1 = kleinschmidt_build(1, 2, {0, 0});
    EssConstant ep = ess_constant(p2p1, anticanonical(p2p1.fan));
    CHECK(ep.value == 5);
    CHECK(ep.used_c1_plus_c3);
  }

  TEST_CASE("essential constant needs big and nef") {
    KleinschmidtData f2 = kleinschmidt_build(1, 1, {2});
    TDivisor dt = zero_divisor(f2.fan);
    dt.coeffs((int)f2.t) = 1;
    CHECK_THROWS_AS(ess_constant(f2, dt), Error);
  }

  TEST_CASE("effective 1-cycles decompose over C1 and C2") {
    for (auto spec : {std::vector<long>{0}, {1}, {2}}) {
      KleinschmidtData K = kleinschmidt_build(1, 1, spec);
      long at = K.a.back();
      for (const Relation& c : enumerate_positive_relations(K.fan, 4)) {
        // solve c = p C1 + q C2 in the curve lattice
        Rat p(c.coeffs(0));              // C1 alone carries rho_0
        Rat q(c.coeffs(K.fan.num_rays() - 1));  // C2 alone carries rho_{n+1}
        IntVector combo = rat_num(p) * K.C1.coeffs + rat_num(q) * K.C2.coeffs;
        CHECK(combo == c.coeffs);
        CHECK(p >= 0);
        CHECK(q >= 0);
        CHECK(p >= q * at);
      }
    }
  }

  TEST_CASE("beta equals deg C1, with the centred pair only for a_t = 0") {
    for (auto spec : {std::vector<long>{0}, {1}, {2}}) {
      KleinschmidtData K = kleinschmidt_build(1, 1, spec);
      TDivisor mk = anticanonical(K.fan);
      BetaResult b = beta(K.fan, mk);
      CHECK(b.beta == deg_relation(K.fan, mk, K.C1));
      CollectionsResult cols = primitive_collections(K.fan);
      int centred = 0;
      for (const auto& pc : cols.collections) centred += pc.centred;
      CHECK(centred == (spec[0] == 0 ? 2 : 1));
      EssConstant ess = ess_constant(K, mk);
      CHECK(ess.value > b.beta);  // strict on rank 2
    }
  }

  TEST_CASE("the general line in the sigma0 chart realizes the minimal class") {
    for (auto spec : {std::vector<long>{0}, {1}, {2}, {3}}) {
      KleinschmidtData K = kleinschmidt_build(1, 1, spec);
      RatVector m(2);
      m << Rat(2), Rat(3);
      CurveFamily line = general_line(K.fan, K.sigma_tn1, m);
      bool some_b_zero = false;
      for (long bi : K.b)
        if (bi == 0) some_b_zero = true;
      IntVector expect = some_b_zero
                             ? IntVector(K.C1.coeffs + K.C3.coeffs)
                             : K.C3.coeffs;
      CHECK(line.cls.coeffs == expect);
    }
  }
}
