#include <doctest.h>

#include "toric/corpus.hpp"
#include "toric/exact.hpp"

using namespace toric;

namespace {

bool is_row_hnf(const IntMatrix& H, int rank) {
  int prev_col = -1;
  for (int r = 0; r < rank; ++r) {
    int c = 0;
    while (c < H.cols() && H(r, c) == 0) ++c;
    if (c == H.cols()) return false;
    if (c <= prev_col) return false;
    if (H(r, c) <= 0) return false;
    for (int i = 0; i < r; ++i)
      if (H(i, c) < 0 || H(i, c) >= H(r, c)) return false;
    prev_col = c;
  }
  for (int r = rank; r < H.rows(); ++r)
    if (!H.row(r).isZero()) return false;
  return true;
}

Rat int_det(const IntMatrix& M) {
  RatMatrix A(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) A(i, j) = Rat(M(i, j));
  Rat det = 1;
  for (int c = 0; c < A.cols(); ++c) {
    int piv = -1;
    for (int i = c; i < A.rows(); ++i)
      if (A(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      A.row(piv).swap(A.row(c));
      det = -det;
    }
    det *= A(c, c);
    for (int i = c + 1; i < A.rows(); ++i) {
      if (A(i, c) == 0) continue;
      Rat f = A(i, c) / A(c, c);
      A.row(i) -= f * A.row(c);
    }
  }
  return det;
}

IntMatrix p2_rays() {
  IntMatrix G(2, 3);
  G << 1, 0, -1, 0, 1, -1;
  return G;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("hnf of the identity") {
    IntMatrix I = IntMatrix::Identity(2, 2);
    HnfResult h = hermite_normal_form(I);
    CHECK(h.H == I);
    CHECK(h.U == I);
    CHECK(h.rank == 2);
  }

  TEST_CASE("hnf of a diagonal matrix") {
    IntMatrix M(2, 2);
    M << 2, 0, 0, 3;
    HnfResult h = hermite_normal_form(M);
    CHECK(h.H == M);
    CHECK(rat_abs(int_det(h.U)) == 1);
    CHECK(IntMatrix(h.U * M) == h.H);
  }

  TEST_CASE("hnf reproduces random matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      IntMatrix M(4, 6);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 6; ++j) M(i, j) = Int(rng.range(-9, 9));
      HnfResult h = hermite_normal_form(M);
      CHECK(IntMatrix(h.U * M) == h.H);
      CHECK(rat_abs(int_det(h.U)) == 1);
      CHECK(is_row_hnf(h.H, h.rank));
    }
  }

  TEST_CASE("kernel of the p2 ray matrix is the line class") {
    IntMatrix K = kernel_lattice(p2_rays());
    REQUIRE(K.rows() == 1);
    IntVector line(3);
    line << 1, 1, 1;
    CHECK(lattice_contains(K, line));
    CHECK((K.row(0).transpose() == line || K.row(0).transpose() == IntVector(-line)));
  }

  TEST_CASE("kernel of the s7 ray matrix") {
    Fan s7 = make_s7();
    IntMatrix K = kernel_lattice(s7.ray_matrix());
    REQUIRE(K.rows() == 3);
    IntVector a(5), b(5);
    a << 1, 0, 1, 0, 0;
    b << 0, 1, 0, 1, 0;
    CHECK(lattice_contains(K, a));
    CHECK(lattice_contains(K, b));
    CHECK((s7.ray_matrix() * K.transpose()).isZero());
  }

  TEST_CASE("full-rank square matrix has empty kernel") {
    IntMatrix M(2, 2);
    M << 2, 1, 1, 1;
    CHECK(kernel_lattice(M).rows() == 0);
  }

  TEST_CASE("kernel lattices are saturated") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix M(2, 5);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 5; ++j) M(i, j) = Int(rng.range(-4, 4));
      IntMatrix K = kernel_lattice(M);
      CHECK((M * K.transpose()).isZero());
      if (K.rows() > 0) {
        // saturation: the maximal minors of any basis have unit gcd
        const int k = (int)K.rows();
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        Int g = 0;
        while (true) {
          IntMatrix sub(k, k);
          for (int j = 0; j < k; ++j) sub.col(j) = K.col(idx[(std::size_t)j]);
          g = int_gcd(g, rat_num(int_det(sub)));
          int pos = k - 1;
          while (pos >= 0 && idx[(std::size_t)pos] == (int)K.cols() - k + pos)
            --pos;
          if (pos < 0) break;
          ++idx[(std::size_t)pos];
          for (int j = pos + 1; j < k; ++j)
            idx[(std::size_t)j] = idx[(std::size_t)j - 1] + 1;
        }
        CHECK(g == 1);
      }
      // invariance under unimodular row operations on M
      IntMatrix M2 = M;
      M2.row(0) += 3 * M2.row(1);
      IntMatrix K2 = kernel_lattice(M2);
      REQUIRE(K2.rows() == K.rows());
      for (int i = 0; i < K.rows(); ++i) {
        CHECK(lattice_contains(K2, IntVector(K.row(i).transpose())));
        CHECK(lattice_contains(K, IntVector(K2.row(i).transpose())));
      }
    }
  }

  TEST_CASE("strict feasibility of the unit simplex interior") {
    // <m, rho_i> > -a_i for D = the third boundary divisor of p2
    IntMatrix A = p2_rays().transpose();
    RatVector b(3);
    b << 0, 0, -1;
    StrictLp lp = lp_strict_feasible(A, b);
    REQUIRE(lp.feasible);
    RatVector w = lp.witness;
    for (int i = 0; i < 3; ++i) {
      Rat lhs = 0;
      for (int k = 0; k < 2; ++k) lhs += Rat(A(i, k)) * w(k);
      CHECK(lhs > b(i));
    }
  }

  TEST_CASE("zero divisor polytope has no interior") {
    IntMatrix A = p2_rays().transpose();
    CHECK_FALSE(lp_strict_feasible(A, RatVector::Zero(3)).feasible);
  }

  TEST_CASE("anticanonical polytope of f2 has an interior point") {
    Fan f2 = kleinschmidt_build(1, 1, {2}).fan;
    IntMatrix A = f2.ray_matrix().transpose();
    RatVector b = RatVector::Constant(4, Rat(-1));
    StrictLp lp = lp_strict_feasible(A, b);
    REQUIRE(lp.feasible);
    // (0, -1/2) works by hand; any witness must satisfy all four strictly
    for (int i = 0; i < 4; ++i) {
      Rat lhs = 0;
      for (int k = 0; k < 2; ++k) lhs += Rat(A(i, k)) * lp.witness(k);
      CHECK(lhs > b(i));
    }
  }

  TEST_CASE("redundant inequalities never flip strict feasibility") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      IntMatrix A(4, 2);
      RatVector b(4);
      for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 2; ++k) A(i, k) = Int(rng.range(-3, 3));
        b(i) = Rat(Int(rng.range(-4, 2)));
      }
      bool feas = lp_strict_feasible(A, b).feasible;
      // implied row: sum of two rows, rhs the sum (implied by the system)
      IntMatrix A2(5, 2);
      A2.topRows(4) = A;
      A2.row(4) = A.row(0) + A.row(1);
      RatVector b2(5);
      b2.head(4) = b;
      b2(4) = b(0) + b(1);
      bool feas2 = lp_strict_feasible(A2, b2).feasible;
      if (feas) CHECK(feas2);
    }
  }

  TEST_CASE("feasibility is invariant under common positive scaling") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix A(3, 2);
      RatVector b(3);
      for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 2; ++k) A(i, k) = Int(rng.range(-3, 3));
        b(i) = Rat(Int(rng.range(-3, 3)));
      }
      long s = rng.range(2, 7);
      IntMatrix As = A * Int(s);
      RatVector bs = b * Rat(s);
      CHECK(lp_strict_feasible(A, b).feasible ==
            lp_strict_feasible(As, bs).feasible);
    }
  }

  TEST_CASE("cone membership") {
    std::vector<IntVector> gens;
    IntVector g1(2), g2(2), t(2);
    g1 << 1, 0;
    g2 << 1, 2;
    gens = {g1, g2};
    t << 3, 2;
    CHECK(in_cone(gens, t));  // 2*g1 + g2
    t << -1, 0;
    CHECK_FALSE(in_cone(gens, t));
    t << 0, 0;
    CHECK(in_cone(gens, t));
  }
}
