#include "toric/curves.hpp"

#include <algorithm>
#include <set>

namespace toric {

std::vector<Relation> enumerate_positive_relations(const Fan& fan,
                                                   long coeff_bound) {
  fan.require_smooth_complete();
  if (coeff_bound < 0) fail(ErrorCode::BadInput, "negative bound");
  PicBasis pic = pic_basis(fan);
  const int r = pic.r;
  const int m = fan.num_rays();
  const IntMatrix& W = pic.curve_basis;  // r x m

  // x -> c = W^T x is injective; bound |x_j| <= ||row j of (W W^T)^-1 W||_1 * B
  RatMatrix gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat s = 0;
      for (int k = 0; k < m; ++k) s += Rat(W(i, k)) * Rat(W(j, k));
      gram(i, j) = s;
    }
  RatMatrix pinv = rat_inverse(gram);
  std::vector<long> box(r);
  for (int j = 0; j < r; ++j) {
    Rat norm1 = 0;
    for (int k = 0; k < m; ++k) {
      Rat e = 0;
      for (int i = 0; i < r; ++i) e += pinv(j, i) * Rat(W(i, k));
      norm1 += rat_abs(e);
    }
    Rat bound = norm1 * coeff_bound;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), rat_num(bound).get_mpz_t(),
               rat_den(bound).get_mpz_t());
    box[j] = fl.get_si();
  }

  std::vector<Relation> out;
  std::vector<long> x(r, 0);
  for (int j = 0; j < r; ++j) x[j] = -box[j];
  while (true) {
    IntVector c = IntVector::Zero(m);
    for (int j = 0; j < r; ++j)
      if (x[j] != 0) c += Int(x[j]) * W.row(j).transpose();
    bool keep = !c.isZero();
    for (int k = 0; k < m && keep; ++k)
      if (c(k) < 0 || c(k) > coeff_bound) keep = false;
    if (keep) out.push_back(Relation{std::move(c)});
    int j = 0;
    while (j < r && x[j] == box[j]) {
      x[j] = -box[j];
      ++j;
    }
    if (j == r) break;
    ++x[j];
  }
  std::sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) {
    Int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    for (int k = 0; k < a.coeffs.size(); ++k)
      if (a.coeffs(k) != b.coeffs(k)) return a.coeffs(k) < b.coeffs(k);
    return false;
  });
  return out;
}

bool very_free(const Fan& fan, const Relation& c) {
  if (!c.is_positive() || c.is_zero())
    fail(ErrorCode::NotPositive, "very_free needs a nonzero positive relation");
  std::vector<int> sup = c.support();
  IntMatrix M(fan.dim(), (int)sup.size());
  for (std::size_t j = 0; j < sup.size(); ++j) M.col((int)j) = fan.ray(sup[j]);
  return int_rank(M) == fan.dim();
}

namespace {

// One lift draw: distinct root values across the whole tuple; constants for
// degree-zero slots.
std::vector<HPoly> draw_lift(const Fan& fan, const Relation& c, Rng& rng) {
  std::set<long> used;
  auto fresh = [&]() {
    while (true) {
      long v = rng.range(1, 1000);
      if (used.insert(v).second) return v;
    }
  };
  std::vector<HPoly> f;
  for (int i = 0; i < fan.num_rays(); ++i) {
    long d = c.coeffs(i).get_si();
    if (d == 0) {
      f.push_back(HPoly::constant(Rat(rng.range(1, 1000))));
      continue;
    }
    HPoly p = HPoly::constant(Rat(1));
    for (long k = 0; k < d; ++k) p = mul(p, HPoly::linear_root(Rat(fresh())));
    f.push_back(std::move(p));
  }
  return f;
}

// presentation matrix of the pulled-back Euler sequence: column per kernel
// basis relation, entry (i,j) = w_j(i) * f_i
std::vector<std::vector<HPoly>> presentation(const Fan& fan,
                                             const IntMatrix& W,
                                             const std::vector<HPoly>& f) {
  const int m = fan.num_rays();
  const int r = (int)W.rows();
  std::vector<std::vector<HPoly>> phi((std::size_t)m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < r; ++j) {
      Rat w = Rat(W(j, i));
      phi[(std::size_t)i].push_back(w == 0 ? HPoly::zero() : scale(f[(std::size_t)i], w));
    }
  }
  return phi;
}

bool subbundle_certificate(const std::vector<std::vector<HPoly>>& phi, int r) {
  const int m = (int)phi.size();
  std::vector<int> idx(r);
  for (int k = 0; k < r; ++k) idx[k] = k;
  HPoly g = HPoly::zero();
  while (true) {
    std::vector<std::vector<HPoly>> sub;
    for (int k = 0; k < r; ++k) sub.push_back(phi[(std::size_t)idx[k]]);
    HPoly d = hpoly_det(sub);
    if (!d.is_zero()) {
      g = g.is_zero() ? d : hpoly_gcd(g, d);
      if (g.deg == 0) return true;
    }
    int k = r - 1;
    while (k >= 0 && idx[k] == m - r + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return false;
}

// h^0 of the kernel of (g_i) -> (sum_i W(j,i) f_i g_i)_j at twist k: exact
// nullity of the section-level linear map.
long twist_h0(const Fan& fan, const IntMatrix& W, const std::vector<HPoly>& f,
              const Relation& c, long k) {
  const int m = fan.num_rays();
  const int r = (int)W.rows();
  std::vector<long> dims((std::size_t)m);
  long domain = 0;
  for (int i = 0; i < m; ++i) {
    long di = k - c.coeffs(i).get_si() + 1;  // h^0(O(k - c_i))
    dims[(std::size_t)i] = di > 0 ? di : 0;
    domain += dims[(std::size_t)i];
  }
  if (domain == 0) return 0;
  const long codomain = (long)r * (k + 1);
  RatMatrix M = RatMatrix::Zero(codomain, domain);
  long col = 0;
  for (int i = 0; i < m; ++i) {
    for (long a = 0; a < dims[(std::size_t)i]; ++a, ++col) {
      // basis monomial u^a v^(k-ci-a); product with f_i shifts coefficients
      for (int j = 0; j < r; ++j) {
        if (W(j, i) == 0) continue;
        Rat w = Rat(W(j, i));
        for (long t = 0; t <= f[(std::size_t)i].deg; ++t) {
          Rat fc = f[(std::size_t)i].coeff(t);
          if (fc == 0) continue;
          long row = (long)j * (k + 1) + (a + t);
          M(row, col) += w * fc;
        }
      }
    }
  }
  return domain - rat_rank(M);
}

std::vector<long> read_type(const Fan& fan, const IntMatrix& W,
                            const std::vector<HPoly>& f, const Relation& c) {
  const int n = fan.dim();
  Int total = c.total();
  std::vector<long> type;
  long prev_h0 = 0, prev_delta = 0;
  for (long k = 0;; ++k) {
    long h0 = twist_h0(fan, W, f, c, k);
    long delta = h0 - prev_h0;  // #(a_i <= k)
    for (long rep = 0; rep < delta - prev_delta; ++rep) type.push_back(k);
    prev_h0 = h0;
    prev_delta = delta;
    if (delta == n) break;
    if (k > total.get_si() + 1)
      fail(ErrorCode::Internal, "splitting type did not terminate");
  }
  return type;
}

}  // namespace

SplittingType splitting_type(const Fan& fan, const Relation& c,
                             std::uint64_t seed) {
  fan.require_smooth_complete();
  if (!c.is_positive() || c.is_zero())
    fail(ErrorCode::NotPositive,
         "splitting_type needs a nonzero positive relation");
  if (!(fan.ray_matrix() * c.coeffs).isZero())
    fail(ErrorCode::BadInput, "not a relation of this fan");
  PicBasis pic = pic_basis(fan);

  auto certified_type = [&](std::uint64_t s, int attempts_left,
                            std::vector<long>& out) -> bool {
    for (int t = 0; t < attempts_left; ++t) {
      Rng rng(s + 0x100u * (std::uint64_t)t);
      std::vector<HPoly> f = draw_lift(fan, c, rng);
      auto phi = presentation(fan, pic.curve_basis, f);
      if (!subbundle_certificate(phi, pic.r)) continue;
      out = read_type(fan, pic.curve_basis, f, c);
      return true;
    }
    return false;
  };

  const int resample_limit = 8;
  std::vector<long> a, b;
  for (int round = 0; round < 4; ++round) {
    std::uint64_t s1 = seed + 2 * (std::uint64_t)round;
    std::uint64_t s2 = seed + 2 * (std::uint64_t)round + 1 + 0x9e3779b9ull;
    if (!certified_type(s1, resample_limit, a) ||
        !certified_type(s2, resample_limit, b))
      fail(ErrorCode::GenericityFailure,
           "no certified general lift within the resample budget");
    if (a == b) {
      SplittingType st;
      st.degrees = a;
      if (st.total() != c.total())
        fail(ErrorCode::Internal, "splitting degrees do not sum to deg c");
      return st;
    }
  }
  fail(ErrorCode::GenericityFailure, "independent seeds keep disagreeing");
}

CurveFamily CurveFamily::reparametrized() const {
  CurveFamily out = *this;
  for (auto& p : out.polys) {
    if (p.is_zero()) continue;
    std::reverse(p.coeffs.begin(), p.coeffs.end());
  }
  return out;
}

namespace {

CurveFamily build_line(const Fan& fan, int sigma, const RatVector& m,
                       bool require_all_nonzero) {
  fan.require_smooth_complete();
  const int n = fan.dim();
  if ((int)m.size() != n) fail(ErrorCode::BadInput, "parameter length");
  if (sigma < 0 || sigma >= fan.num_cones())
    fail(ErrorCode::BadInput, "chart index");
  bool any = false;
  for (int k = 0; k < n; ++k) {
    if (m(k) != 0) any = true;
    else if (require_all_nonzero)
      fail(ErrorCode::ZeroParameter, "general line needs all m_i nonzero");
  }
  if (!any) fail(ErrorCode::ZeroParameter, "all parameters vanish");

  const auto& inside = fan.cone(sigma);
  IntVector s = IntVector::Zero(n);
  for (int k = 0; k < n; ++k)
    if (m(k) != 0) s += fan.ray(inside[k]);
  ConeLocation loc = locate_cone(fan, IntVector(-s));

  // class: +1 on the moving sigma(1) rays, plus the coefficients of the cone
  // completing their negative sum
  IntVector cls = IntVector::Zero(fan.num_rays());
  for (int k = 0; k < n; ++k)
    if (m(k) != 0) cls(inside[k]) += 1;
  const auto& tau_cone = fan.cone(loc.cone);
  std::vector<Int> tau_coeff(n);
  for (int k = 0; k < n; ++k) {
    if (rat_den(loc.coords(k)) != 1)
      fail(ErrorCode::Internal, "lattice location with fractional coords");
    tau_coeff[(std::size_t)k] = rat_num(loc.coords(k));
    cls(tau_cone[k]) += tau_coeff[(std::size_t)k];
  }

  CurveFamily fam;
  fam.chart = sigma;
  fam.params = m;
  fam.cls = make_relation(fan, std::move(cls));

  // lift: (m_i u + v) * v^(a_i) on sigma(1), v^(a_rho) on the completing
  // rays, 1 elsewhere; reproduces y_i(t) = m_i t + 1 on the chart
  std::vector<HPoly> polys((std::size_t)fan.num_rays(), HPoly::constant(Rat(1)));
  for (int k = 0; k < n; ++k) {
    if (tau_coeff[(std::size_t)k] == 0) continue;
    polys[(std::size_t)tau_cone[k]] =
        HPoly::monomial_v(tau_coeff[(std::size_t)k].get_si());
  }
  for (int k = 0; k < n; ++k) {
    if (m(k) == 0) continue;
    HPoly lin{1, {Rat(1), m(k)}};  // m_k u + v
    polys[(std::size_t)inside[k]] = mul(polys[(std::size_t)inside[k]], lin);
  }
  fam.polys = std::move(polys);
  for (int i = 0; i < fan.num_rays(); ++i) {
    long want = fam.cls.coeffs(i).get_si();
    long got = fam.polys[(std::size_t)i].deg;
    if (want != got) fail(ErrorCode::Internal, "lift degree mismatch");
  }
  return fam;
}

}  // namespace

CurveFamily general_line(const Fan& fan, int sigma, const RatVector& m) {
  return build_line(fan, sigma, m, true);
}

CurveFamily line_through_unit(const Fan& fan, int sigma, const RatVector& m) {
  return build_line(fan, sigma, m, false);
}

}  // namespace toric
