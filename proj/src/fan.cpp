#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace toric {

namespace {

Int submatrix_det(const IntMatrix& rays, const std::vector<int>& cols) {
  const int n = (int)cols.size();
  RatMatrix M(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) M(i, j) = Rat(rays(i, cols[j]));
  // fraction-free enough at these sizes: plain rational elimination
  Rat det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (M(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      M.row(piv).swap(M.row(c));
      det = -det;
    }
    det *= M(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (M(i, c) == 0) continue;
      Rat f = M(i, c) / M(c, c);
      M.row(i) -= f * M.row(c);
    }
  }
  if (rat_den(det) != 1) fail(ErrorCode::Internal, "integer determinant");
  return rat_num(det);
}

}  // namespace

Fan::Fan(int dim, IntMatrix rays, std::vector<std::vector<int>> max_cones)
    : n_(dim), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  if (n_ <= 0 || rays_.rows() != n_)
    fail(ErrorCode::BadInput, "ray matrix must have dim rows");
  if (rays_.cols() < n_ + 1)
    fail(ErrorCode::BadInput, "a complete fan needs at least dim+1 rays");
  for (int i = 0; i < num_rays(); ++i)
    if (ray(i).isZero()) fail(ErrorCode::BadInput, "zero ray");
  for (auto& c : cones_) {
    if ((int)c.size() != n_)
      fail(ErrorCode::BadInput, "maximal cones must have dim rays");
    std::sort(c.begin(), c.end());
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 0 || c[k] >= num_rays())
        fail(ErrorCode::BadInput, "cone ray index out of range");
      if (k > 0 && c[k] == c[k - 1])
        fail(ErrorCode::BadInput, "repeated ray in cone");
    }
  }
  if (cones_.empty()) fail(ErrorCode::BadInput, "no maximal cones");
  duals_.resize(cones_.size());
}

bool Fan::cone_has_ray(int s, int r) const {
  const auto& c = cones_[s];
  return std::binary_search(c.begin(), c.end(), r);
}

const IntMatrix& Fan::cone_dual(int s) const {
  if (duals_[s].size() == 0) {
    RatMatrix M(n_, n_);
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i) M(i, j) = Rat(rays_(i, cones_[s][j]));
    RatMatrix inv = rat_inverse(M);
    IntMatrix out(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (rat_den(inv(i, j)) != 1)
          fail(ErrorCode::ConeNotUnimodular,
               "cone " + std::to_string(s) + " is not regular");
        out(i, j) = rat_num(inv(i, j));
      }
    duals_[s] = std::move(out);
  }
  return duals_[s];
}

bool Fan::is_smooth() const {
  if (!smooth_) {
    ValidationReport rep = validate(*this);
    smooth_ = rep.smooth;
    complete_ = rep.complete;
  }
  return *smooth_;
}

bool Fan::is_complete() const {
  if (!complete_) is_smooth();
  return *complete_;
}

void Fan::require_smooth_complete() const {
  if (!is_smooth() || !is_complete())
    fail(ErrorCode::NotSmoothComplete,
         "operation requires a smooth complete fan");
}

std::string ValidationIssue::describe() const {
  switch (kind) {
    case RaysNotPrimitive:
      return "RaysNotPrimitive: ray " + std::to_string(index);
    case ConeNotUnimodular:
      return "ConeNotUnimodular: cone " + std::to_string(index);
    case FacetUnpaired:
      return "FacetUnpaired: cone " + std::to_string(index);
    case PointNotCovered:
      return "PointNotCovered: sample " + std::to_string(index);
  }
  return "unknown";
}

ValidationReport validate(const Fan& fan) {
  ValidationReport rep;
  rep.smooth = true;
  rep.complete = true;
  const int n = fan.dim();

  for (int i = 0; i < fan.num_rays(); ++i) {
    Int g = 0;
    for (int k = 0; k < n; ++k) g = int_gcd(g, fan.ray(i)(k));
    if (g != 1) {
      rep.smooth = false;
      rep.issues.push_back({ValidationIssue::RaysNotPrimitive, i});
    }
  }
  for (int s = 0; s < fan.num_cones(); ++s) {
    Int d = submatrix_det(fan.ray_matrix(), fan.cone(s));
    if (d != 1 && d != -1) {
      rep.smooth = false;
      rep.issues.push_back({ValidationIssue::ConeNotUnimodular, s});
    }
  }

  // facet pairing
  std::map<std::vector<int>, int> facet_count;
  for (int s = 0; s < fan.num_cones(); ++s) {
    const auto& c = fan.cone(s);
    for (int omit = 0; omit < n; ++omit) {
      std::vector<int> facet;
      for (int k = 0; k < n; ++k)
        if (k != omit) facet.push_back(c[k]);
      facet_count[facet] += 1;
    }
  }
  for (int s = 0; s < fan.num_cones(); ++s) {
    const auto& c = fan.cone(s);
    for (int omit = 0; omit < n; ++omit) {
      std::vector<int> facet;
      for (int k = 0; k < n; ++k)
        if (k != omit) facet.push_back(c[k]);
      if (facet_count[facet] != 2) {
        rep.complete = false;
        rep.issues.push_back({ValidationIssue::FacetUnpaired, s});
        omit = n;  // one report per cone is enough
      }
    }
  }

  // randomized coverage certificate; only meaningful on regular cones
  if (rep.smooth && rep.complete) {
    Rng rng(0x746f726963ull);  // fixed: validation must be reproducible
    for (int trial = 0; trial < 100; ++trial) {
      RatVector v(n);
      for (int k = 0; k < n; ++k)
        v(k) = frac(rng.range(-1000, 1000), rng.range(1, 60));
      bool found = false;
      for (int s = 0; s < fan.num_cones() && !found; ++s) {
        RatVector coords = (fan.cone_dual(s).cast<Rat>() * v).eval();
        found = true;
        for (int k = 0; k < n; ++k)
          if (coords(k) < 0) {
            found = false;
            break;
          }
      }
      if (!found) {
        rep.complete = false;
        rep.issues.push_back({ValidationIssue::PointNotCovered, trial});
        break;
      }
    }
  }
  return rep;
}

ConeLocation locate_cone(const Fan& fan, const RatVector& v) {
  const int n = fan.dim();
  if ((int)v.size() != n) fail(ErrorCode::BadInput, "locate_cone dimension");
  for (int s = 0; s < fan.num_cones(); ++s) {
    RatVector coords = (fan.cone_dual(s).cast<Rat>() * v).eval();
    bool inside = true;
    for (int k = 0; k < n; ++k)
      if (coords(k) < 0) {
        inside = false;
        break;
      }
    if (inside) return {s, coords};
  }
  fail(ErrorCode::Internal, "point not located; fan not complete?");
}

int locate_cone_lattice(const Fan& fan, const IntVector& v, IntVector& coords) {
  const int n = fan.dim();
  coords.resize(n);
  for (int s = 0; s < fan.num_cones(); ++s) {
    const IntMatrix& dual = fan.cone_dual(s);
    bool inside = true;
    for (int k = 0; k < n && inside; ++k) {
      Int& c = coords(k);
      c = 0;
      for (int j = 0; j < n; ++j)
        mpz_addmul(c.get_mpz_t(), dual(k, j).get_mpz_t(), v(j).get_mpz_t());
      if (c < 0) inside = false;
    }
    if (inside) return s;
  }
  fail(ErrorCode::Internal, "lattice point not located; fan not complete?");
}

ConeLocation locate_cone(const Fan& fan, const IntVector& v) {
  IntVector coords;
  int s = locate_cone_lattice(fan, v, coords);
  ConeLocation loc;
  loc.cone = s;
  loc.coords = RatVector(v.size());
  for (int i = 0; i < v.size(); ++i) loc.coords(i) = Rat(coords(i));
  return loc;
}

std::vector<Wall> walls(const Fan& fan) {
  fan.require_smooth_complete();
  const int n = fan.dim();
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> shared;
  for (int s = 0; s < fan.num_cones(); ++s) {
    const auto& c = fan.cone(s);
    for (int omit = 0; omit < n; ++omit) {
      std::vector<int> facet;
      for (int k = 0; k < n; ++k)
        if (k != omit) facet.push_back(c[k]);
      shared[facet].push_back({s, c[omit]});
    }
  }
  std::vector<Wall> out;
  for (auto& [facet, owners] : shared) {
    if (owners.size() != 2) fail(ErrorCode::Internal, "unpaired facet");
    Wall w;
    w.rays = facet;
    w.cone_a = owners[0].first;
    w.ray_a = owners[0].second;
    w.cone_b = owners[1].first;
    w.ray_b = owners[1].second;
    // express u' in the basis of cone_a; the relation follows
    IntVector coords = fan.cone_dual(w.cone_a) * fan.ray(w.ray_b);
    const auto& ca = fan.cone(w.cone_a);
    IntVector rel = IntVector::Zero(fan.num_rays());
    rel(w.ray_b) += 1;
    for (int k = 0; k < n; ++k) rel(ca[k]) -= coords(k);
    if (rel(w.ray_a) != 1)
      fail(ErrorCode::Internal, "wall relation is not unimodular");
    if (!(fan.ray_matrix() * rel).isZero())
      fail(ErrorCode::Internal, "wall relation does not vanish");
    w.relation = rel;
    out.push_back(std::move(w));
  }
  return out;
}

std::string fan_hash(const Fan& fan) {
  std::ostringstream os;
  os << fan.dim() << ';';
  for (int i = 0; i < fan.num_rays(); ++i) {
    for (int k = 0; k < fan.dim(); ++k) os << fan.ray(i)(k) << ',';
    os << '|';
  }
  for (const auto& c : fan.max_cones()) {
    for (int r : c) os << r << ',';
    os << '|';
  }
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char ch : os.str()) {
    h ^= (unsigned char)ch;
    h *= 0x100000001b3ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

}  // namespace toric
