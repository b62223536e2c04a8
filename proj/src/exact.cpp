#include "toric/exact.hpp"

namespace toric {

namespace {

void swap_rows(IntMatrix& M, int a, int b) {
  if (a != b) M.row(a).swap(M.row(b));
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& M) {
  const int rows = (int)M.rows(), cols = (int)M.cols();
  HnfResult res;
  res.H = M;
  res.U = IntMatrix::Identity(rows, rows);
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    // clear column c below row r by euclidean steps on rows
    while (true) {
      int piv = -1;
      for (int i = r; i < rows; ++i) {
        if (H(i, c) == 0) continue;
        if (piv < 0 || int_abs(H(i, c)) < int_abs(H(piv, c))) piv = i;
      }
      if (piv < 0) break;
      swap_rows(H, r, piv);
      swap_rows(U, r, piv);
      bool cleared = true;
      for (int i = r + 1; i < rows; ++i) {
        if (H(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
        H.row(i) -= q * H.row(r);
        U.row(i) -= q * U.row(r);
        if (H(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.row(r) = -H.row(r);
      U.row(r) = -U.row(r);
    }
    // reduce entries above the pivot into [0, pivot)
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
      if (q != 0) {
        H.row(i) -= q * H.row(r);
        U.row(i) -= q * U.row(r);
      }
    }
    ++r;
  }
  res.rank = r;
  return res;
}

IntMatrix kernel_lattice(const IntMatrix& M) {
  IntMatrix Mt = M.transpose();
  HnfResult h = hermite_normal_form(Mt);
  int k = (int)Mt.rows() - h.rank;
  IntMatrix basis(k, Mt.rows());
  for (int i = 0; i < k; ++i) basis.row(i) = h.U.row(h.rank + i);
  return basis;
}

int int_rank(const IntMatrix& M) { return hermite_normal_form(M).rank; }

bool lattice_contains(const IntMatrix& basis, const IntVector& v) {
  // solve x * basis = v over Z via the HNF of basis
  HnfResult h = hermite_normal_form(basis);
  IntVector rem = v;
  const int cols = (int)basis.cols();
  int row = 0;
  for (int c = 0; c < cols && row < h.rank; ++c) {
    if (h.H(row, c) == 0) continue;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem(c).get_mpz_t(),
                h.H(row, c).get_mpz_t());
    if (r != 0) return false;
    rem -= q * h.H.row(row).transpose();
    ++row;
  }
  return rem.isZero();
}

LpResult solve_lp(const RatMatrix& A_in, const RatVector& b_in,
                  const RatVector& c_in) {
  const int m = (int)A_in.rows();
  const int n = (int)A_in.cols();
  RatMatrix A = A_in;
  RatVector b = b_in;
  for (int i = 0; i < m; ++i) {
    if (b(i) < 0) {
      A.row(i) = -A.row(i);
      b(i) = -b(i);
    }
  }

  // Tableau with artificial basis; columns 0..n-1 original, n..n+m-1
  // artificial. Two-phase, Bland's rule, so termination is unconditional.
  const int total = n + m;
  RatMatrix T(m, total);
  T.setZero();
  T.leftCols(n) = A;
  for (int i = 0; i < m; ++i) T(i, n + i) = 1;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;
  RatVector rhs = b;

  auto pivot = [&](int row, int col) {
    Rat p = T(row, col);
    T.row(row) /= p;
    rhs(row) /= p;
    for (int i = 0; i < m; ++i) {
      if (i == row || T(i, col) == 0) continue;
      Rat f = T(i, col);
      T.row(i) -= f * T.row(row);
      rhs(i) -= f * rhs(row);
    }
    basis[row] = col;
  };

  auto run_simplex = [&](const RatVector& cost, int ncols) -> Rat {
    while (true) {
      // reduced costs via basis multipliers
      RatVector y = RatVector::Zero(m);
      for (int i = 0; i < m; ++i) y(i) = cost(basis[i]);
      int enter = -1;
      Rat enter_rc;
      for (int j = 0; j < ncols; ++j) {
        Rat rc = cost(j);
        for (int i = 0; i < m; ++i) rc -= y(i) * T(i, j);
        if (rc < 0) {
          enter = j;  // Bland: smallest index
          enter_rc = rc;
          break;
        }
      }
      if (enter < 0) break;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (T(i, enter) <= 0) continue;
        Rat ratio = rhs(i) / T(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) {
        return Rat(-1);  // unbounded marker, caller interprets
      }
      pivot(leave, enter);
    }
    Rat obj = 0;
    for (int i = 0; i < m; ++i) obj += cost(basis[i]) * rhs(i);
    return obj;
  };

  LpResult out;

  // phase 1
  {
    RatVector cost = RatVector::Zero(total);
    for (int i = 0; i < m; ++i) cost(n + i) = 1;
    Rat obj = run_simplex(cost, total);
    if (obj != 0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    // drive leftover artificials out of the basis
    for (int i = 0; i < m; ++i) {
      if (basis[i] < n) continue;
      int enter = -1;
      for (int j = 0; j < n; ++j) {
        if (T(i, j) != 0) {
          enter = j;
          break;
        }
      }
      if (enter >= 0) pivot(i, enter);
      // an all-zero row is a redundant constraint; its artificial stays
      // basic at value zero and never re-enters phase 2
    }
  }

  // phase 2 (artificial columns priced out by +inf surrogate: keep their
  // costs at a value that can never go negative -- simply exclude them)
  {
    RatVector cost = RatVector::Zero(total);
    cost.head(n) = c_in;
    while (true) {
      RatVector y = RatVector::Zero(m);
      for (int i = 0; i < m; ++i) y(i) = cost(basis[i]);
      int enter = -1;
      for (int j = 0; j < n; ++j) {
        Rat rc = cost(j);
        for (int i = 0; i < m; ++i) rc -= y(i) * T(i, j);
        if (rc < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) break;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (T(i, enter) <= 0) continue;
        Rat ratio = rhs(i) / T(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) {
        out.status = LpStatus::Unbounded;
        return out;
      }
      pivot(leave, enter);
    }
    out.status = LpStatus::Optimal;
    out.x = RatVector::Zero(n);
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) out.x(basis[i]) = rhs(i);
    out.objective = c_in.dot(out.x);
  }
  return out;
}

bool in_cone(const std::vector<IntVector>& gens, const IntVector& target) {
  const int dim = (int)target.size();
  const int k = (int)gens.size();
  if (k == 0) return target.isZero();
  RatMatrix A(dim, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < dim; ++i) A(i, j) = Rat(gens[j](i));
  RatVector b(dim);
  for (int i = 0; i < dim; ++i) b(i) = Rat(target(i));
  LpResult r = solve_lp(A, b, RatVector::Zero(k));
  return r.status == LpStatus::Optimal;
}

StrictLp lp_strict_feasible(const IntMatrix& A, const RatVector& b) {
  const int k = (int)A.rows();
  const int n = (int)A.cols();
  // maximize t s.t. A x - 1 t >= b, t <= 1; strict feasibility iff t* > 0.
  // standard form: x = xp - xm, surplus s (k), slack s2 (1).
  const int vars = 2 * n + 2 + k + 1;
  RatMatrix M = RatMatrix::Zero(k + 1, vars);
  RatVector rhs(k + 1);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      M(i, j) = Rat(A(i, j));
      M(i, n + j) = Rat(-A(i, j));
    }
    M(i, 2 * n) = -1;      // t+
    M(i, 2 * n + 1) = 1;   // t-
    M(i, 2 * n + 2 + i) = -1;
    rhs(i) = b(i);
  }
  M(k, 2 * n) = 1;
  M(k, 2 * n + 1) = -1;
  M(k, vars - 1) = 1;
  rhs(k) = 1;
  RatVector cost = RatVector::Zero(vars);
  cost(2 * n) = -1;
  cost(2 * n + 1) = 1;
  LpResult r = solve_lp(M, rhs, cost);
  StrictLp out;
  if (r.status != LpStatus::Optimal) return out;  // cannot happen: bounded
  Rat t = -r.objective;
  if (t > 0) {
    out.feasible = true;
    out.witness = RatVector(n);
    for (int j = 0; j < n; ++j) out.witness(j) = r.x(j) - r.x(n + j);
  }
  return out;
}

int rat_rank(RatMatrix M) {
  const int rows = (int)M.rows(), cols = (int)M.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (M(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) M.row(piv).swap(M.row(r));
    for (int i = r + 1; i < rows; ++i) {
      if (M(i, c) == 0) continue;
      Rat f = M(i, c) / M(r, c);
      M.row(i) -= f * M.row(r);
    }
    ++r;
  }
  return r;
}

long nullity(const RatMatrix& M) { return M.cols() - rat_rank(M); }

RatMatrix rat_inverse(const RatMatrix& M) {
  const int n = (int)M.rows();
  if (M.cols() != n) fail(ErrorCode::BadInput, "inverse of non-square matrix");
  RatMatrix W(n, 2 * n);
  W.leftCols(n) = M;
  W.rightCols(n) = RatMatrix::Identity(n, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (W(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) fail(ErrorCode::BadInput, "singular matrix");
    if (piv != c) W.row(piv).swap(W.row(c));
    W.row(c) /= W(c, c);
    for (int i = 0; i < n; ++i) {
      if (i == c || W(i, c) == 0) continue;
      Rat f = W(i, c);
      W.row(i) -= f * W.row(c);
    }
  }
  return W.rightCols(n);
}

std::optional<RatVector> solve_linear(const RatMatrix& A, const RatVector& b) {
  const int rows = (int)A.rows(), cols = (int)A.cols();
  RatMatrix W(rows, cols + 1);
  W.leftCols(cols) = A;
  W.col(cols) = b;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (W(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) W.row(piv).swap(W.row(r));
    W.row(r) /= W(r, c);
    for (int i = 0; i < rows; ++i) {
      if (i == r || W(i, c) == 0) continue;
      Rat f = W(i, c);
      W.row(i) -= f * W.row(r);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (W(i, cols) != 0) return std::nullopt;
  RatVector x = RatVector::Zero(cols);
  for (int i = 0; i < r; ++i) x(pivot_col[i]) = W(i, cols);
  return x;
}

IntVector primitive_part(const IntVector& v) {
  Int g = 0;
  for (int i = 0; i < v.size(); ++i) g = int_gcd(g, v(i));
  if (g == 0 || g == 1) return v;
  IntVector w = v;
  for (int i = 0; i < w.size(); ++i) w(i) /= g;
  return w;
}

}  // namespace toric
