#pragma once

#include "toric/exact.hpp"
#include "toric/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

class Fan;
struct ValidationReport;
ValidationReport validate(const Fan& fan);

// A complete simplicial fan given by primitive ray generators and maximal
// cones. Rays sit as the columns of an n x (n+r) integer matrix; every
// analysis refers to rays by their input index and input order is never
// changed.
class Fan {
public:
  Fan(int dim, IntMatrix rays, std::vector<std::vector<int>> max_cones);

  int dim() const { return n_; }
  int num_rays() const { return (int)rays_.cols(); }
  int num_cones() const { return (int)cones_.size(); }
  const IntMatrix& ray_matrix() const { return rays_; }
  IntVector ray(int i) const { return rays_.col(i); }
  const std::vector<std::vector<int>>& max_cones() const { return cones_; }
  const std::vector<int>& cone(int s) const { return cones_[s]; }
  bool cone_has_ray(int s, int ray) const;

  // Inverse of the ray submatrix of cone s; integral exactly when the cone
  // is regular. Rows are the dual basis vectors of sigma(1).
  const IntMatrix& cone_dual(int s) const;

  bool is_smooth() const;
  bool is_complete() const;
  void require_smooth_complete() const;

private:
  int n_;
  IntMatrix rays_;
  std::vector<std::vector<int>> cones_;
  mutable std::vector<IntMatrix> duals_;        // lazily built
  mutable std::optional<bool> smooth_, complete_;
  friend struct ValidationReport;
  friend ValidationReport validate(const Fan&);
};

struct ValidationIssue {
  enum Kind { RaysNotPrimitive, ConeNotUnimodular, FacetUnpaired, PointNotCovered };
  Kind kind;
  int index;  // offending ray / cone / wall-owner / sample index
  std::string describe() const;
};

struct ValidationReport {
  bool smooth = false;
  bool complete = false;
  std::vector<ValidationIssue> issues;
  bool ok() const { return smooth && complete; }
};

// validate: smoothness means primitive rays and unit-determinant maximal
// cones. Completeness certificate: every wall shared by exactly two maximal
// cones, plus 100 seeded pseudo-random rational points all located inside
// some cone.

struct ConeLocation {
  int cone = -1;
  RatVector coords;  // barycentric coordinates on sigma(1), all >= 0
};

// First maximal cone containing v, with exact coordinates. Requires a
// complete fan; lattice input yields integer coordinates.
ConeLocation locate_cone(const Fan& fan, const RatVector& v);
ConeLocation locate_cone(const Fan& fan, const IntVector& v);

// Integer-only variant for lattice points on regular fans; writes the cone
// coordinates into `coords` (resized to dim) and returns the cone index.
int locate_cone_lattice(const Fan& fan, const IntVector& v, IntVector& coords);

struct Wall {
  std::vector<int> rays;   // the n-1 shared ray indices, sorted
  int cone_a = -1, cone_b = -1;
  int ray_a = -1, ray_b = -1;  // completing rays u, u'
  IntVector relation;          // u + u' + sum b_i v_i = 0, coefficient 1 on u, u'
};

std::vector<Wall> walls(const Fan& fan);

// 64-bit FNV-1a over the canonical encoding; embedded in every report.
std::string fan_hash(const Fan& fan);

}  // namespace toric
