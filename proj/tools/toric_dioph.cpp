#include "toric/acceptance.hpp"
#include "toric/approx.hpp"
#include "toric/corpus.hpp"
#include "toric/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using namespace toric;

constexpr std::uint64_t kDefaultSeed = 1729;

std::uint64_t resolve_seed(std::optional<std::uint64_t> cli_seed) {
  if (cli_seed) return *cli_seed;
  if (const char* env = std::getenv("TORIC_DIOPH_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw Error(ErrorCode::BadInput, "TORIC_DIOPH_SEED must be an integer");
    }
  }
  return kDefaultSeed;
}

Fan load_fan(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("fan file: ") + e.what());
  }
  return fan_from_json(j);
}

TDivisor load_divisor(const Fan& fan, const std::string& spec) {
  if (spec == "anticanonical") return anticanonical(fan);
  Json j;
  try {
    j = Json::parse(read_file(spec));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("divisor file: ") + e.what());
  }
  return divisor_from_json(j, fan);
}

Place parse_place(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "oo") return Place::inf();
  try {
    Int p(s);
    if (p < 2) throw 0;
    return Place::prime(p);
  } catch (...) {
    throw Error(ErrorCode::BadInput, "place must be 'inf' or a prime");
  }
}

Rat parse_rat(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (...) {
    throw Error(ErrorCode::BadInput, "bad rational: " + s);
  }
}

RatVector parse_rat_list(const std::string& s, int expect) {
  std::vector<Rat> vals;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) vals.push_back(parse_rat(item));
  if ((int)vals.size() != expect)
    throw Error(ErrorCode::BadInput, "expected " + std::to_string(expect) +
                                         " comma-separated values");
  RatVector v((int)vals.size());
  for (int i = 0; i < v.size(); ++i) v(i) = vals[(std::size_t)i];
  return v;
}

void emit(const Json& report, const std::string& out_path,
          const std::string& format) {
  std::string text;
  if (format == "csv") {
    throw Error(ErrorCode::BadInput,
                "csv output applies to liouville search dumps only");
  }
  if (format == "markdown") {
    std::ostringstream md;
    md << "# toric-dioph report\n\n```json\n" << report.dump(2) << "\n```\n";
    text = md.str();
  } else {
    text = report.dump(2) + "\n";
  }
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

Json envelope(const Fan& fan, const std::string& command, const Json& config) {
  Json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["fan_hash"] = fan_hash(fan);
  j["config"] = config;
  return j;
}

int default_chart(const Fan& fan) {
  auto star = star_witness(fan);
  return star ? star->sigma0 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diophantine approximation invariants of split toric varieties"};
  app.require_subcommand(1);

  std::string fan_path, divisor_spec = "anticanonical", out_path, format = "json";
  std::optional<std::uint64_t> cli_seed;
  int jobs = (int)std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--seed", cli_seed, "seed override (beats TORIC_DIOPH_SEED)");
  app.add_option("--jobs", jobs, "worker bound for searches");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json|markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));

  auto* validate_cmd = app.add_subcommand("validate", "fan sanity checks");
  validate_cmd->add_option("fan", fan_path, "fan json file")->required();

  auto* analyze_cmd =
      app.add_subcommand("analyze", "pic, effective cone, collections, beta, locus");
  analyze_cmd->add_option("fan", fan_path)->required();
  analyze_cmd->add_option("--divisor", divisor_spec,
                          "divisor file or 'anticanonical'");

  auto* divisor_cmd =
      app.add_subcommand("divisor", "positivity report; heights at points");
  std::string points_path, divisor_place = "inf";
  divisor_cmd->add_option("fan", fan_path)->required();
  divisor_cmd->add_option("--divisor", divisor_spec);
  divisor_cmd->add_option("--points", points_path,
                          "evaluate lifts, heights, distances at these points");
  divisor_cmd->add_option("--place", divisor_place, "'inf' or a prime");

  auto* curve_cmd =
      app.add_subcommand("curve", "positive relations, very-freeness, splitting");
  long curve_bound = 3;
  bool with_splitting = false;
  curve_cmd->add_option("fan", fan_path)->required();
  curve_cmd->add_option("--divisor", divisor_spec);
  curve_cmd->add_option("--bound", curve_bound, "coefficient bound");
  curve_cmd->add_flag("--splitting", with_splitting,
                      "compute splitting types (seeded)");

  auto* approx_cmd =
      app.add_subcommand("approx", "slope estimates and liouville searches");
  std::string mode = "slope", line_params, place_str = "inf", gamma_str = "2";
  long box = 20;
  int chart = -1, schedule_count = 21;
  bool exclude_locus = false, chart_monomial = false;
  std::string dump_path;
  approx_cmd->add_option("fan", fan_path)->required();
  approx_cmd->add_option("--divisor", divisor_spec);
  approx_cmd->add_option("--mode", mode, "slope|liouville|accumulation")
      ->check(CLI::IsMember({"slope", "liouville", "accumulation"}));
  approx_cmd->add_option("--line", line_params,
                         "comma list of line parameters (slope mode)");
  approx_cmd->add_option("--place", place_str, "'inf' or a prime");
  approx_cmd->add_option("--gamma", gamma_str, "exponent on the distance");
  approx_cmd->add_option("--box", box, "numerator/denominator bound");
  approx_cmd->add_option("--chart", chart, "chart cone index (default sigma0)");
  approx_cmd->add_option("--count", schedule_count, "schedule length");
  approx_cmd->add_flag("--exclude-locus", exclude_locus,
                       "remove the accumulating locus from the search");
  approx_cmd->add_flag("--chart-monomial", chart_monomial,
                       "use the single sigma0-chart monomial height");
  approx_cmd->add_option("--dump", dump_path, "write scanned rows as csv");

  auto* kl_cmd = app.add_subcommand("kleinschmidt",
                                    "rank-2 fan generator and closed forms");
  long kl_s = 1, kl_t = 1;
  std::string kl_a = "1", kl_fan_out;
  kl_cmd->add_option("s", kl_s)->required();
  kl_cmd->add_option("t", kl_t)->required();
  kl_cmd->add_option("a", kl_a, "comma list a_1<=...<=a_t")->required();
  kl_cmd->add_option("--divisor", divisor_spec);
  kl_cmd->add_option("--emit-fan", kl_fan_out, "write the generated fan json");

  auto* corpus_cmd =
      app.add_subcommand("corpus", "run the acceptance suite on bundled fans");
  std::string emit_dir;
  corpus_cmd->add_option("--emit", emit_dir, "also write the bundled fan jsons");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    std::uint64_t seed = resolve_seed(cli_seed);

    if (validate_cmd->parsed()) {
      Fan fan = load_fan(fan_path);
      ValidationReport rep = validate(fan);
      Json j = envelope(fan, "validate", {{"fan", fan_path}});
      j["validation"] = validation_to_json(rep);
      emit(j, out_path, format);
      return rep.ok() ? 0 : 1;
    }

    if (analyze_cmd->parsed()) {
      Fan fan = load_fan(fan_path);
      ValidationReport v = validate(fan);
      if (!v.ok()) {
        Json j = envelope(fan, "analyze", {{"fan", fan_path}});
        j["validation"] = validation_to_json(v);
        emit(j, out_path, format);
        return 1;
      }
      TDivisor D = load_divisor(fan, divisor_spec);
      Json j = envelope(fan, "analyze",
                        {{"fan", fan_path}, {"divisor", divisor_spec}, {"seed", seed}});
      j["pic_rank"] = pic_basis(fan).r;
      j["effective_cone"] = effcone_to_json(effective_cone(fan));
      CollectionsResult cols = primitive_collections(fan);
      j["collections"] = collections_to_json(fan, D, cols);
      j["warning_no_cpc"] = !cols.has_centred;
      try {
        BetaResult b = beta(fan, D);
        j["beta"] = b.beta.get_si();
        if (b.alpha)
          j["alpha"] = b.alpha->get_si();
        else
          j["alpha"] = nullptr;  // upper bound only without (*)
      } catch (const Error& e) {
        j["beta_error"] = e.what();
      }
      try {
        j["locus"] = locus_to_json(accumulating_locus(fan, D));
      } catch (const Error& e) {
        j["locus_error"] = e.what();
      }
      try {
        j["diagnostics"] = diagnostics_to_json(diagnostics_star(fan, D));
      } catch (const Error& e) {
        j["diagnostics_error"] = e.what();
      }
      emit(j, out_path, format);
      return 0;
    }

    if (divisor_cmd->parsed()) {
      Fan fan = load_fan(fan_path);
      if (!validate(fan).ok()) return 1;
      TDivisor D = load_divisor(fan, divisor_spec);
      Json j = envelope(fan, "divisor",
                        {{"fan", fan_path}, {"divisor", divisor_spec}});
      PositivityReport pos = positivity(fan, D);
      j["positivity"] = positivity_to_json(pos);
      if (!points_path.empty()) {
        if (!pos.globally_generated)
          throw Error(ErrorCode::NotGloballyGenerated,
                      "heights need a globally generated divisor");
        Place place = parse_place(divisor_place);
        Json pj;
        try {
          pj = Json::parse(read_file(points_path));
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorCode::BadInput, std::string("points file: ") + e.what());
        }
        HeightTable table = height_table(fan, D);
        Json rows = Json::array();
        for (const RationalPoint& P : points_from_json(pj, fan)) {
          CoxPoint lift = cox_lift(fan, P);
          Json row;
          Json y = Json::array(), X = Json::array();
          for (int i = 0; i < P.y.size(); ++i) y.push_back(rat_to_string(P.y(i)));
          for (int i = 0; i < lift.X.size(); ++i)
            X.push_back(lift.X(i).get_str());
          row["point"] = std::move(y);
          row["lift"] = std::move(X);
          row["height"] = rat_to_string(salberger_height(fan, table, P));
          row["distance"] = rat_to_string(distance(P, place));
          rows.push_back(std::move(row));
        }
        j["points"] = std::move(rows);
      }
      emit(j, out_path, format);
      return 0;
    }

    if (curve_cmd->parsed()) {
      Fan fan = load_fan(fan_path);
      if (!validate(fan).ok()) return 1;
      TDivisor D = load_divisor(fan, divisor_spec);
      Json j = envelope(fan, "curve",
                        {{"fan", fan_path},
                         {"divisor", divisor_spec},
                         {"bound", curve_bound},
                         {"seed", seed}});
      Json arr = Json::array();
      for (const Relation& c : enumerate_positive_relations(fan, curve_bound)) {
        Json cj;
        Json coeffs = Json::array();
        for (int i = 0; i < c.coeffs.size(); ++i)
          coeffs.push_back(c.coeffs(i).get_si());
        cj["coeffs"] = std::move(coeffs);
        cj["degree"] = deg_relation(fan, D, c).get_si();
        cj["very_free"] = very_free(fan, c);
        if (with_splitting)
          cj["splitting"] = splitting_to_json(splitting_type(fan, c, seed));
        arr.push_back(std::move(cj));
      }
      j["relations"] = std::move(arr);
      emit(j, out_path, format);
      return 0;
    }

    if (approx_cmd->parsed()) {
      Fan fan = load_fan(fan_path);
      if (!validate(fan).ok()) return 1;
      TDivisor D = load_divisor(fan, divisor_spec);
      int use_chart = chart >= 0 ? chart : default_chart(fan);
      Place place = parse_place(place_str);
      Json config = {{"fan", fan_path},       {"divisor", divisor_spec},
                     {"mode", mode},          {"place", place_str},
                     {"box", box},            {"chart", use_chart},
                     {"jobs", jobs},          {"seed", seed},
                     {"gamma", gamma_str},    {"count", schedule_count}};
      Json j = envelope(fan, "approx", config);
      if (mode == "slope") {
        if (line_params.empty())
          throw Error(ErrorCode::BadInput, "--line is required in slope mode");
        RatVector m = parse_rat_list(line_params, fan.dim());
        CurveFamily fam = line_through_unit(fan, use_chart, m);
        Schedule sched;
        sched.count = schedule_count;
        j["class_degree"] = deg_relation(fan, D, fam.cls).get_si();
        j["slope"] =
            slope_to_json(estimate_alpha_on_curve(fan, D, fam, place, sched));
      } else if (mode == "liouville") {
        SearchOptions o;
        o.chart = use_chart;
        o.jobs = jobs;
        if (chart_monomial) {
          o.mode = HeightMode::ChartMonomial;
          o.monomial_chart = use_chart;
        }
        std::optional<AccumulatingLocus> locus;
        if (exclude_locus) locus = accumulating_locus(fan, D);
        std::vector<SearchRow> rows;
        bool want_rows = !dump_path.empty() || format == "csv";
        std::vector<SearchRow>* rows_ptr = want_rows ? &rows : nullptr;
        if (rows_ptr) o.jobs = 1;
        Rat gamma = parse_rat(gamma_str);
        SearchMin m = liouville_search(fan, D, gamma, box,
                                       locus ? &*locus : nullptr, place, o,
                                       rows_ptr);
        j["search"] = search_to_json(m, gamma);
        if (rows_ptr) {
          std::ostringstream csv;
          csv << "point,distance,height,value\n";
          long a = rat_num(gamma).get_si(), bq = rat_den(gamma).get_si();
          for (const auto& row : rows) {
            csv << '"';
            for (int i = 0; i < row.y.size(); ++i)
              csv << (i ? ";" : "") << rat_to_string(row.y(i));
            csv << "\"," << rat_to_string(row.dist) << ','
                << rat_to_string(row.height) << ','
                << rat_to_string(rat_pow(row.dist, a) * rat_pow(row.height, bq))
                << '\n';
          }
          if (format == "csv") {
            if (out_path.empty())
              std::cout << csv.str();
            else
              write_file(out_path, csv.str());
            if (!dump_path.empty()) write_file(dump_path, csv.str());
            return 0;
          }
          write_file(dump_path, csv.str());
          j["dump"] = dump_path;
        }
      } else {
        AccumulatingLocus locus = accumulating_locus(fan, D);
        SearchOptions o;
        o.chart = locus.sigma0;
        o.jobs = jobs;
        j["accumulation"] =
            accumulation_to_json(verify_accumulation(fan, D, locus, box, place, o));
      }
      emit(j, out_path, format);
      return 0;
    }

    if (kl_cmd->parsed()) {
      std::vector<long> a;
      {
        std::stringstream ss(kl_a);
        std::string item;
        while (std::getline(ss, item, ',')) a.push_back(std::stol(item));
      }
      KleinschmidtData K = kleinschmidt_build(kl_s, kl_t, a);
      TDivisor D = load_divisor(K.fan, divisor_spec);
      Json j = envelope(K.fan, "kleinschmidt",
                        {{"s", kl_s}, {"t", kl_t}, {"a", a}, {"divisor", divisor_spec}});
      j["fan"] = fan_to_json(K.fan);
      Rank2Positivity pos = positivity_rank2(K, D);
      j["rank2"] = {{"A", pos.A.get_si()},
                    {"B", pos.B.get_si()},
                    {"nef", pos.nef},
                    {"ample", pos.ample},
                    {"big", pos.big}};
      try {
        BetaResult b = beta(K.fan, D);
        j["beta"] = b.beta.get_si();
      } catch (const Error& e) {
        j["beta_error"] = e.what();
      }
      try {
        EssConstant ess = ess_constant(K, D);
        Json cls = Json::array();
        for (int i = 0; i < ess.cls.coeffs.size(); ++i)
          cls.push_back(ess.cls.coeffs(i).get_si());
        j["alpha_ess"] = ess.value.get_si();
        j["achieving_class"] = std::move(cls);
        j["achieving_class_is_c1_plus_c3"] = ess.used_c1_plus_c3;
      } catch (const Error& e) {
        j["alpha_ess_error"] = e.what();
      }
      if (!kl_fan_out.empty())
        write_file(kl_fan_out, fan_to_json(K.fan).dump(2) + "\n");
      emit(j, out_path, format);
      return 0;
    }

    if (corpus_cmd->parsed()) {
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (const auto& e : corpus())
          write_file(emit_dir + "/" + e.name + ".json",
                     fan_to_json(e.fan).dump(2) + "\n");
      }
      std::vector<CriterionResult> results = run_acceptance(jobs, seed);
      bool all = true;
      for (const auto& r : results) {
        all &= r.pass;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion "
                  << r.number << ": " << r.name << " (" << r.detail << ") ["
                  << r.seconds << "s]\n";
      }
      std::cout << (all ? "acceptance: all criteria pass\n"
                        : "acceptance: FAILURES present\n");
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BadInput ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
