#include "toric/collections.hpp"

#include <algorithm>

namespace toric {

Relation PrimitiveCollection::relation(const Fan& fan) const {
  if (!centred)
    fail(ErrorCode::BadInput, "only centred collections define relations");
  IntVector c = IntVector::Zero(fan.num_rays());
  for (int i : rays) c(i) = 1;
  return make_relation(fan, std::move(c));
}

namespace {

using Bits = std::uint64_t;

Bits to_bits(const std::vector<int>& idx) {
  Bits b = 0;
  for (int i : idx) b |= Bits(1) << i;
  return b;
}

}  // namespace

CollectionsResult primitive_collections(const Fan& fan) {
  fan.require_smooth_complete();
  const int m = fan.num_rays();
  if (m > 62) fail(ErrorCode::BadInput, "too many rays");
  std::vector<Bits> cone_bits;
  for (const auto& c : fan.max_cones()) cone_bits.push_back(to_bits(c));
  auto is_face = [&](Bits s) {
    for (Bits cb : cone_bits)
      if ((s & cb) == s) return true;
    return false;
  };

  CollectionsResult out;
  std::vector<Bits> nonfaces;
  // by increasing size; a set containing a known non-face is skipped
  for (int size = 2; size <= fan.dim() + 1; ++size) {
    std::vector<int> idx(size);
    // iterate over all ascending index tuples
    for (int k = 0; k < size; ++k) idx[k] = k;
    while (true) {
      Bits s = 0;
      for (int k = 0; k < size; ++k) s |= Bits(1) << idx[k];
      bool contains_nonface = false;
      for (Bits nf : nonfaces)
        if ((s & nf) == nf) {
          contains_nonface = true;
          break;
        }
      if (!contains_nonface && !is_face(s)) {
        nonfaces.push_back(s);
        PrimitiveCollection pc;
        pc.rays = idx;
        IntVector sum = IntVector::Zero(fan.dim());
        for (int i : idx) sum += fan.ray(i);
        if (sum.isZero()) {
          pc.centred = true;
          out.has_centred = true;
        } else {
          ConeLocation loc = locate_cone(fan, sum);
          pc.containing_cone = loc.cone;
          pc.cone_coords = IntVector(fan.dim());
          for (int k = 0; k < fan.dim(); ++k) {
            if (rat_den(loc.coords(k)) != 1)
              fail(ErrorCode::Internal, "lattice point with fractional coords");
            pc.cone_coords(k) = rat_num(loc.coords(k));
          }
        }
        out.collections.push_back(std::move(pc));
      }
      // next combination
      int k = size - 1;
      while (k >= 0 && idx[k] == m - size + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

BetaResult beta(const Fan& fan, const TDivisor& D) {
  PositivityReport pos = positivity(fan, D);
  if (!pos.globally_generated || !pos.big)
    fail(ErrorCode::NotNefOrBig, "beta needs O(D) globally generated and big");
  CollectionsResult cols = primitive_collections(fan);
  if (!cols.has_centred)
    fail(ErrorCode::NoCPC, "no centred primitive collection");
  BetaResult out;
  bool first = true;
  for (const auto& pc : cols.collections) {
    if (!pc.centred) continue;
    Int d = deg_relation(fan, D, pc.relation(fan));
    if (first || d < out.beta) {
      out.beta = d;
      out.minimizers.clear();
      first = false;
    }
    if (d == out.beta) out.minimizers.push_back(pc);
  }
  if (effective_cone(fan).simplicial) out.alpha = out.beta;
  return out;
}

AccumulatingLocus accumulating_locus(const Fan& fan, const TDivisor& D) {
  PositivityReport pos = positivity(fan, D);
  if (!pos.ample) fail(ErrorCode::NotAmple, "locus needs an ample divisor");
  auto star = star_witness(fan);
  if (!star)
    fail(ErrorCode::HypothesisStarFails,
         "effective cone is not simplicial; no sigma0 chart");
  PicBasis pic = pic_basis(fan);
  if (pic.r == 1)
    fail(ErrorCode::IsProjectiveSpace,
         "projective space has no proper accumulating locus");

  BetaResult b = beta(fan, D);
  AccumulatingLocus out;
  out.sigma0 = star->sigma0;
  out.beta = b.beta;
  for (const auto& pc : b.minimizers) {
    LocusComponent comp;
    comp.collection = pc.rays;
    comp.cardinality = pc.cardinality();
    for (int k = 0; k < fan.dim(); ++k) {
      int ray = star->inside[k];
      if (std::binary_search(pc.rays.begin(), pc.rays.end(), ray))
        comp.free_coords.push_back(k);
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

DiagnosticsReport diagnostics_star(const Fan& fan, const TDivisor& D) {
  auto star = star_witness(fan);
  if (!star) fail(ErrorCode::HypothesisStarFails, "(**) does not hold");
  PositivityReport pos = positivity(fan, D);
  if (!pos.globally_generated)
    fail(ErrorCode::NotGloballyGenerated,
         "diagnostics need a globally generated divisor");
  if (!pos.big) fail(ErrorCode::NotNefOrBig, "diagnostics need a big divisor");

  const int n = fan.dim();
  const int r = (int)star->outside.size();
  DiagnosticsReport rep;
  Int bval = beta(fan, D).beta;

  // outside-ray relations P_{n+j}: rho_out + sum_i b(i,j) rho_in = 0
  std::vector<Relation> outside_rel;
  rep.outside_relations_positive = true;
  for (int j = 0; j < r; ++j) {
    IntVector c = IntVector::Zero(fan.num_rays());
    c(star->outside[j]) = 1;
    for (int i = 0; i < n; ++i) {
      c(star->inside[i]) = star->b(i, j);
      if (star->b(i, j) < 0) rep.outside_relations_positive = false;
    }
    outside_rel.push_back(make_relation(fan, std::move(c)));
  }
  rep.outside_deg_ge_beta = true;
  for (const auto& rel : outside_rel)
    if (deg_relation(fan, D, rel) < bval) rep.outside_deg_ge_beta = false;

  CollectionsResult cols = primitive_collections(fan);
  rep.cpc_one_ray_outside = true;
  rep.cpc_disjoint = true;
  std::vector<const PrimitiveCollection*> centred;
  for (const auto& pc : cols.collections)
    if (pc.centred) centred.push_back(&pc);
  for (const auto* pc : centred) {
    int outside_count = 0;
    for (int ray : pc->rays)
      if (!std::binary_search(star->inside.begin(), star->inside.end(), ray))
        ++outside_count;
    if (outside_count != 1) rep.cpc_one_ray_outside = false;
  }
  for (std::size_t a = 0; a < centred.size(); ++a)
    for (std::size_t b2 = a + 1; b2 < centred.size(); ++b2) {
      std::vector<int> inter;
      std::set_intersection(centred[a]->rays.begin(), centred[a]->rays.end(),
                            centred[b2]->rays.begin(), centred[b2]->rays.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) rep.cpc_disjoint = false;
    }

  rep.degree_grid = true;
  for (int j = 0; j < r; ++j) {
    Int dj = deg_relation(fan, D, outside_rel[j]);
    for (int i = 0; i < n; ++i)
      if (dj < star->b(i, j) * bval) rep.degree_grid = false;
  }
  return rep;
}

}  // namespace toric
