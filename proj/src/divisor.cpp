#include "toric/divisor.hpp"

namespace toric {

TDivisor anticanonical(const Fan& fan) {
  TDivisor D;
  D.coeffs = IntVector::Constant(fan.num_rays(), 1);
  return D;
}

TDivisor zero_divisor(const Fan& fan) {
  TDivisor D;
  D.coeffs = IntVector::Zero(fan.num_rays());
  return D;
}

Relation make_relation(const Fan& fan, IntVector coeffs) {
  if ((int)coeffs.size() != fan.num_rays())
    fail(ErrorCode::BadInput, "relation length mismatch");
  if (!(fan.ray_matrix() * coeffs).isZero())
    fail(ErrorCode::BadInput, "coefficients are not a relation between rays");
  return Relation{std::move(coeffs)};
}

PicBasis pic_basis(const Fan& fan) {
  fan.require_smooth_complete();
  const int n = fan.dim();
  const int m = fan.num_rays();
  // U * G^T = [T; 0]; T is unimodular because Pic is torsion free, so the
  // HNF leaves the identity and the bottom r rows of U give both the class
  // map and a basis of ker(g).
  IntMatrix Gt = fan.ray_matrix().transpose();
  HnfResult h = hermite_normal_form(Gt);
  if (h.rank != n) fail(ErrorCode::Internal, "ray matrix must have full rank");
  for (int i = 0; i < n; ++i)
    if (h.H(i, i) != 1)
      fail(ErrorCode::Internal, "ray lattice is not saturated");
  PicBasis pic;
  pic.r = m - n;
  pic.class_map = h.U.bottomRows(pic.r);
  pic.curve_basis = pic.class_map;
  return pic;
}

IntVector divisor_class(const PicBasis& pic, const TDivisor& D) {
  return pic.class_map * D.coeffs;
}

SupportFunction support_function(const Fan& fan, const TDivisor& D) {
  fan.require_smooth_complete();
  if ((int)D.coeffs.size() != fan.num_rays())
    fail(ErrorCode::BadInput, "divisor length mismatch");
  SupportFunction sf;
  sf.m_sigma.reserve(fan.num_cones());
  for (int s = 0; s < fan.num_cones(); ++s) {
    // <m, rho_j> = -a_j for rho_j in sigma(1)  <=>  m = -(dual^T) a|sigma
    const auto& c = fan.cone(s);
    IntVector a(fan.dim());
    for (int k = 0; k < fan.dim(); ++k) a(k) = D.coeffs(c[k]);
    sf.m_sigma.push_back(-(fan.cone_dual(s).transpose() * a));
  }
  return sf;
}

Int phi_value(const Fan& fan, const SupportFunction& sf, const IntVector& v) {
  ConeLocation loc = locate_cone(fan, v);
  Int out = 0;
  for (int k = 0; k < fan.dim(); ++k) out += sf.m_sigma[loc.cone](k) * v(k);
  return out;
}

Rat phi_value(const Fan& fan, const SupportFunction& sf, const RatVector& v) {
  ConeLocation loc = locate_cone(fan, v);
  Rat out = 0;
  for (int k = 0; k < fan.dim(); ++k) out += Rat(sf.m_sigma[loc.cone](k)) * v(k);
  return out;
}

Int deg_relation(const Fan& fan, const TDivisor& D, const Relation& P) {
  SupportFunction sf = support_function(fan, D);
  Int via_phi = 0;
  for (int i = 0; i < fan.num_rays(); ++i) {
    if (P.coeffs(i) == 0) continue;
    via_phi -= P.coeffs(i) * phi_value(fan, sf, IntVector(fan.ray(i)));
  }
  Int via_pairing = P.coeffs.dot(D.coeffs);
  if (via_phi != via_pairing)
    fail(ErrorCode::Internal, "degree cross-check failed");
  return via_phi;
}

TDivisor d_sigma(const Fan& fan, const TDivisor& D, int sigma) {
  SupportFunction sf = support_function(fan, D);
  const IntVector& m = sf.m_sigma[sigma];
  TDivisor out;
  out.coeffs = IntVector(fan.num_rays());
  for (int i = 0; i < fan.num_rays(); ++i) {
    Int pairing = 0;
    for (int k = 0; k < fan.dim(); ++k) pairing += m(k) * fan.ray(i)(k);
    out.coeffs(i) = D.coeffs(i) + pairing;
    if (out.coeffs(i) < 0)
      fail(ErrorCode::NotGloballyGenerated,
           "D(sigma) has a negative coefficient; O(D) is not globally "
           "generated");
  }
  for (int k : fan.cone(sigma))
    if (out.coeffs(k) != 0) fail(ErrorCode::Internal, "D(sigma) on sigma(1)");
  return out;
}

}  // namespace toric
