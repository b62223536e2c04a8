#include "toric/positivity.hpp"

#include <algorithm>

namespace toric {

PositivityReport positivity(const Fan& fan, const TDivisor& D) {
  fan.require_smooth_complete();
  PositivityReport rep;
  SupportFunction sf = support_function(fan, D);
  const int n = fan.dim();

  rep.nef = true;
  rep.ample = true;
  for (int i = 0; i < fan.num_rays(); ++i) {
    Int phi_i = -D.coeffs(i);  // phi_D(rho_i) = -a_i
    for (int s = 0; s < fan.num_cones(); ++s) {
      Int lin = 0;
      for (int k = 0; k < n; ++k) lin += sf.m_sigma[s](k) * fan.ray(i)(k);
      if (phi_i > lin) {
        rep.nef = false;
        rep.ample = false;
        if (rep.bad_ray < 0) {
          rep.bad_ray = i;
          rep.bad_cone = s;
        }
      } else if (phi_i == lin && !fan.cone_has_ray(s, i)) {
        rep.ample = false;
        if (rep.bad_ray < 0) {
          rep.bad_ray = i;
          rep.bad_cone = s;
        }
      }
    }
  }
  rep.globally_generated = rep.nef;
  rep.very_ample = rep.ample;

  // P_D = {m : <m, rho_i> >= -a_i}; big iff it has interior
  IntMatrix A = fan.ray_matrix().transpose();
  RatVector b(fan.num_rays());
  for (int i = 0; i < fan.num_rays(); ++i) b(i) = Rat(-D.coeffs(i));
  StrictLp lp = lp_strict_feasible(A, b);
  rep.big = lp.feasible;
  if (lp.feasible) rep.interior_point = lp.witness;
  return rep;
}

std::optional<StarWitness> star_witness(const Fan& fan) {
  fan.require_smooth_complete();
  const int n = fan.dim();
  const int m = fan.num_rays();
  // the witness chart is not unique; take the lexicographically smallest
  // qualifying ray set so reports are reproducible
  std::optional<StarWitness> best;
  for (int s = 0; s < fan.num_cones(); ++s) {
    std::vector<int> outside;
    for (int i = 0; i < m; ++i)
      if (!fan.cone_has_ray(s, i)) outside.push_back(i);
    IntMatrix b(n, (int)outside.size());
    bool ok = true;
    for (std::size_t j = 0; j < outside.size() && ok; ++j) {
      IntVector coords = fan.cone_dual(s) * fan.ray(outside[j]);
      for (int k = 0; k < n; ++k) {
        if (coords(k) > 0) {
          ok = false;
          break;
        }
        b(k, (int)j) = -coords(k);
      }
    }
    if (!ok) continue;
    if (best && best->inside <= fan.cone(s)) continue;
    StarWitness w;
    w.sigma0 = s;
    w.inside = fan.cone(s);
    w.outside = std::move(outside);
    w.b = std::move(b);
    best = std::move(w);
  }
  return best;
}

EffConeReport effective_cone(const Fan& fan) {
  fan.require_smooth_complete();
  EffConeReport rep;
  PicBasis pic = pic_basis(fan);

  std::vector<IntVector> classes;
  for (int i = 0; i < fan.num_rays(); ++i) {
    IntVector cls = primitive_part(pic.class_map.col(i));
    bool dup = false;
    for (const auto& c : classes)
      if (c == cls) {
        dup = true;
        break;
      }
    if (!dup) classes.push_back(cls);
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (j != i) others.push_back(classes[j]);
    if (!in_cone(others, classes[i])) rep.extreme_classes.push_back(classes[i]);
  }
  rep.simplicial = (int)rep.extreme_classes.size() == pic.r;
  rep.sigma0 = star_witness(fan);

  if (rep.simplicial != rep.sigma0.has_value())
    fail(ErrorCode::Internal,
         "simplicial effective cone and the sigma0 test disagree");
  return rep;
}

}  // namespace toric
