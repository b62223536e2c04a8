#include "toric/io.hpp"

#include <fstream>
#include <sstream>

namespace toric {

Json fan_to_json(const Fan& fan) {
  Json j;
  j["dim"] = fan.dim();
  Json rays = Json::array();
  for (int i = 0; i < fan.num_rays(); ++i) {
    Json ray = Json::array();
    for (int k = 0; k < fan.dim(); ++k) ray.push_back(fan.ray(i)(k).get_si());
    rays.push_back(std::move(ray));
  }
  j["rays"] = std::move(rays);
  Json cones = Json::array();
  for (const auto& c : fan.max_cones()) cones.push_back(c);
  j["max_cones"] = std::move(cones);
  return j;
}

Fan fan_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
    fail(ErrorCode::BadInput, "fan json needs dim, rays, max_cones");
  int n = j["dim"].get<int>();
  const auto& rays = j["rays"];
  IntMatrix R(n, (int)rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if ((int)rays[i].size() != n)
      fail(ErrorCode::BadInput, "ray of wrong dimension");
    for (int k = 0; k < n; ++k) R(k, (int)i) = Int(rays[i][(std::size_t)k].get<long>());
  }
  std::vector<std::vector<int>> cones;
  for (const auto& c : j["max_cones"]) cones.push_back(c.get<std::vector<int>>());
  return Fan(n, std::move(R), std::move(cones));
}

Json divisor_to_json(const TDivisor& D) {
  Json j = Json::array();
  for (int i = 0; i < D.coeffs.size(); ++i) j.push_back(D.coeffs(i).get_si());
  return j;
}

TDivisor divisor_from_json(const Json& j, const Fan& fan) {
  const Json* arr = &j;
  if (j.is_object() && j.contains("coeffs")) arr = &j["coeffs"];
  if (!arr->is_array() || (int)arr->size() != fan.num_rays())
    fail(ErrorCode::BadInput, "divisor must list one coefficient per ray");
  TDivisor D;
  D.coeffs = IntVector(fan.num_rays());
  for (int i = 0; i < fan.num_rays(); ++i)
    D.coeffs(i) = Int((*arr)[(std::size_t)i].get<long>());
  return D;
}

Json points_to_json(const std::vector<RationalPoint>& pts) {
  Json j;
  j["chart"] = pts.empty() ? 0 : pts.front().chart;
  Json arr = Json::array();
  for (const auto& P : pts) {
    Json point = Json::array();
    for (int i = 0; i < P.y.size(); ++i)
      point.push_back({rat_num(P.y(i)).get_si(), rat_den(P.y(i)).get_si()});
    arr.push_back(std::move(point));
  }
  j["points"] = std::move(arr);
  return j;
}

std::vector<RationalPoint> points_from_json(const Json& j, const Fan& fan) {
  int chart = j.at("chart").get<int>();
  std::vector<RationalPoint> out;
  for (const auto& pj : j.at("points")) {
    RationalPoint P;
    P.chart = chart;
    P.y = RatVector(fan.dim());
    if ((int)pj.size() != fan.dim())
      fail(ErrorCode::BadInput, "point of wrong dimension");
    for (int i = 0; i < fan.dim(); ++i) {
      long num = pj[(std::size_t)i][0].get<long>();
      long den = pj[(std::size_t)i][1].get<long>();
      if (den <= 0) fail(ErrorCode::BadInput, "denominators must be positive");
      P.y(i) = frac(Int(num), Int(den));
    }
    out.push_back(std::move(P));
  }
  return out;
}

Json validation_to_json(const ValidationReport& rep) {
  Json j;
  j["smooth"] = rep.smooth;
  j["complete"] = rep.complete;
  Json issues = Json::array();
  for (const auto& is : rep.issues) issues.push_back(is.describe());
  j["issues"] = std::move(issues);
  return j;
}

Json positivity_to_json(const PositivityReport& rep) {
  Json j;
  j["nef"] = rep.nef;
  j["globally_generated"] = rep.globally_generated;
  j["ample"] = rep.ample;
  j["very_ample"] = rep.very_ample;
  j["big"] = rep.big;
  if (rep.bad_ray >= 0) {
    j["witness"] = {{"ray", rep.bad_ray}, {"cone", rep.bad_cone}};
  }
  if (rep.interior_point) {
    Json w = Json::array();
    for (int i = 0; i < rep.interior_point->size(); ++i)
      w.push_back(rat_to_string((*rep.interior_point)(i)));
    j["interior_point"] = std::move(w);
  }
  return j;
}

Json effcone_to_json(const EffConeReport& rep) {
  Json j;
  Json rays = Json::array();
  for (const auto& cls : rep.extreme_classes) {
    Json v = Json::array();
    for (int i = 0; i < cls.size(); ++i) v.push_back(cls(i).get_si());
    rays.push_back(std::move(v));
  }
  j["extreme_classes"] = std::move(rays);
  j["simplicial"] = rep.simplicial;
  if (rep.sigma0) {
    j["sigma0"] = rep.sigma0->sigma0;
  } else {
    j["sigma0"] = nullptr;
  }
  return j;
}

Json collections_to_json(const Fan& fan, const TDivisor& D,
                         const CollectionsResult& cols) {
  Json arr = Json::array();
  for (const auto& pc : cols.collections) {
    Json j;
    j["rays"] = pc.rays;
    j["centred"] = pc.centred;
    j["cardinality"] = pc.cardinality();
    if (pc.centred) {
      j["degree"] = deg_relation(fan, D, pc.relation(fan)).get_si();
    } else {
      j["containing_cone"] = pc.containing_cone;
      Json coords = Json::array();
      for (int k = 0; k < pc.cone_coords.size(); ++k)
        coords.push_back(pc.cone_coords(k).get_si());
      j["cone_coords"] = std::move(coords);
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

Json locus_to_json(const AccumulatingLocus& locus) {
  Json j;
  j["sigma0"] = locus.sigma0;
  j["beta"] = locus.beta.get_si();
  Json comps = Json::array();
  for (const auto& c : locus.components) {
    Json cj;
    cj["collection"] = c.collection;
    cj["free_coords"] = c.free_coords;
    cj["cardinality"] = c.cardinality;
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  return j;
}

Json diagnostics_to_json(const DiagnosticsReport& rep) {
  Json j;
  j["outside_relations_positive"] = rep.outside_relations_positive;
  j["outside_deg_ge_beta"] = rep.outside_deg_ge_beta;
  j["cpc_one_ray_outside"] = rep.cpc_one_ray_outside;
  j["cpc_disjoint"] = rep.cpc_disjoint;
  j["degree_grid"] = rep.degree_grid;
  j["all_pass"] = rep.all();
  return j;
}

Json search_to_json(const SearchMin& m, const Rat& gamma) {
  Json j;
  j["gamma"] = rat_to_string(gamma);
  j["any_point"] = m.any;
  if (m.any) {
    Json y = Json::array();
    for (int i = 0; i < m.argmin.size(); ++i)
      y.push_back(rat_to_string(m.argmin(i)));
    j["argmin"] = std::move(y);
    j["distance"] = rat_to_string(m.dist);
    j["height"] = rat_to_string(m.height);
    if (m.value) j["value"] = rat_to_string(*m.value);
    j["value_decimal"] = m.value_decimal;
  }
  return j;
}

Json accumulation_to_json(const AccumulationReport& rep) {
  auto box_to_json = [](const BoxMin& b) {
    Json j;
    j["box"] = b.box;
    j["any_point"] = b.any;
    if (b.any) {
      j["distance"] = rat_to_string(b.dist);
      j["height"] = rat_to_string(b.height);
      j["value_decimal"] = b.value_decimal;
    }
    return j;
  };
  Json j;
  j["beta"] = rep.beta.get_si();
  Json on = Json::array();
  for (const auto& b : rep.on_locus) on.push_back(box_to_json(b));
  j["on_locus"] = std::move(on);
  Json off = Json::array();
  for (const auto& row : rep.off_locus) {
    Json rj;
    rj["delta"] = rat_to_string(row.delta);
    Json boxes = Json::array();
    for (const auto& b : row.boxes) boxes.push_back(box_to_json(b));
    rj["boxes"] = std::move(boxes);
    rj["pass"] = row.pass;
    off.push_back(std::move(rj));
  }
  j["off_locus"] = std::move(off);
  j["pass"] = rep.pass;
  return j;
}

Json slope_to_json(const SlopeEstimate& est) {
  Json j;
  j["gamma_hat"] = est.gamma_hat;
  j["window"] = est.window;
  j["residual"] = est.residual;
  return j;
}

Json splitting_to_json(const SplittingType& st) {
  Json j;
  j["degrees"] = st.degrees;
  j["mu_min"] = st.mu_min();
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::BadInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::BadInput, "cannot write " + path);
  out << content;
}

}  // namespace toric
