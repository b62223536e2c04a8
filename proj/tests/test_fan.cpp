#include <doctest.h>

#include "toric/corpus.hpp"
#include "toric/fan.hpp"

using namespace toric;

namespace {

Fan broken_s7() {
  IntMatrix rays(2, 5);
  rays << 1, 0, -1, 0, 1, 0, 1, 0, -1, 1;
  return Fan(2, std::move(rays),
             {{0, 4}, {4, 1}, {1, 2}, {3, 0}});  // cone {2,3} removed
}

IntMatrix unimodular2(long a) {
  IntMatrix U(2, 2);
  U << 1, a, 0, 1;
  return U;
}

}  // namespace

TEST_SUITE("fan") {
  TEST_CASE("p2 and s7 validate as smooth complete") {
    for (const auto& fan : {make_projective_space(2), make_s7()}) {
      ValidationReport rep = validate(fan);
      CHECK(rep.smooth);
      CHECK(rep.complete);
      CHECK(rep.issues.empty());
    }
  }

  TEST_CASE("dropping a cone is caught as an unpaired facet") {
    ValidationReport rep = validate(broken_s7());
    CHECK(rep.smooth);
    CHECK_FALSE(rep.complete);
    bool unpaired = false;
    for (const auto& is : rep.issues)
      if (is.kind == ValidationIssue::FacetUnpaired) unpaired = true;
    CHECK(unpaired);
  }

  TEST_CASE("non-primitive rays are rejected, not normalized") {
    IntMatrix rays(2, 3);
    rays << 2, 0, -2, 0, 1, -1;
    Fan fan(2, std::move(rays), {{0, 1}, {1, 2}, {2, 0}});
    ValidationReport rep = validate(fan);
    CHECK_FALSE(rep.smooth);
    bool flagged = false;
    for (const auto& is : rep.issues)
      if (is.kind == ValidationIssue::RaysNotPrimitive && is.index == 0)
        flagged = true;
    CHECK(flagged);
    CHECK(fan.ray(0)(0) == 2);  // untouched
  }

  TEST_CASE("cone location on p2") {
    Fan p2 = make_projective_space(2);
    RatVector v(2);
    v << 1, 1;
    ConeLocation loc = locate_cone(p2, v);
    CHECK(p2.cone(loc.cone) == std::vector<int>({0, 1}));
    CHECK(loc.coords(0) == 1);
    CHECK(loc.coords(1) == 1);
  }

  TEST_CASE("cone location of the origin and lattice points on s7") {
    Fan s7 = make_s7();
    ConeLocation zero = locate_cone(s7, IntVector(IntVector::Zero(2)));
    CHECK(zero.coords.isZero());
    IntVector v(2);
    v << 2, 1;
    ConeLocation loc = locate_cone(s7, v);
    CHECK(s7.cone(loc.cone) == std::vector<int>({0, 4}));
    CHECK(loc.coords(0) == 1);  // (2,1) = 1*(1,0) + 1*(1,1)
    CHECK(loc.coords(1) == 1);
  }

  TEST_CASE("wall structure of p2") {
    Fan p2 = make_projective_space(2);
    std::vector<Wall> ws = walls(p2);
    REQUIRE(ws.size() == 3);
    for (const Wall& w : ws) {
      IntVector expect = IntVector::Constant(3, 1);
      CHECK(w.relation == expect);
    }
  }

  TEST_CASE("wall count and relations on f1 and s7") {
    Fan f1 = kleinschmidt_build(1, 1, {1}).fan;
    std::vector<Wall> wf = walls(f1);
    CHECK(wf.size() == 4);
    // the wall on the fibre ray e2 joins e1 and -e1 with coefficient 0 on e2
    bool found = false;
    for (const Wall& w : wf) {
      if (w.rays == std::vector<int>{2}) {
        found = true;
        CHECK(w.relation(0) == 1);
        CHECK(w.relation(1) == 1);
        CHECK(w.relation(2) == 0);
        CHECK(w.relation(3) == 0);
      }
    }
    CHECK(found);
    CHECK(walls(make_s7()).size() == 5);
  }

  TEST_CASE("wall relations live in the curve lattice with unit pairing") {
    for (const auto& entry : corpus()) {
      IntMatrix K = kernel_lattice(entry.fan.ray_matrix());
      std::size_t expected =
          (std::size_t)(entry.fan.dim() * entry.fan.num_cones()) / 2;
      std::vector<Wall> ws = walls(entry.fan);
      CHECK(ws.size() == expected);
      for (const Wall& w : ws) {
        CHECK(lattice_contains(K, w.relation));
        CHECK(w.relation(w.ray_a) == 1);
        CHECK(w.relation(w.ray_b) == 1);
      }
    }
  }

  TEST_CASE("analyses are equivariant under a lattice change of basis") {
    Fan s7 = make_s7();
    for (long a : {-2L, 1L, 3L}) {
      IntMatrix U = unimodular2(a);
      Fan tf(2, IntMatrix(U * s7.ray_matrix()), s7.max_cones());
      ValidationReport rep = validate(tf);
      CHECK(rep.smooth);
      CHECK(rep.complete);
      CHECK(walls(tf).size() == walls(s7).size());
    }
  }

  TEST_CASE("fan hash is stable and sensitive") {
    Fan a = make_s7();
    Fan b = make_s7();
    CHECK(fan_hash(a) == fan_hash(b));
    CHECK(fan_hash(a) != fan_hash(make_s6()));
  }
}
