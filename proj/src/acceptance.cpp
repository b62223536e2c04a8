#include "toric/acceptance.hpp"

#include "toric/approx.hpp"
#include "toric/corpus.hpp"
#include "toric/io.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace toric {

namespace {

using Clock = std::chrono::steady_clock;

IntMatrix random_unimodular(int n, Rng& rng) {
  IntMatrix U = IntMatrix::Identity(n, n);
  for (int step = 0; step < 12; ++step) {
    int kind = (int)(rng.next() % 3);
    int i = (int)(rng.next() % (std::uint64_t)n);
    int j = (int)(rng.next() % (std::uint64_t)n);
    if (kind == 0 && i != j) {
      U.row(i).swap(U.row(j));
    } else if (kind == 1) {
      U.row(i) = -U.row(i);
    } else if (i != j) {
      Int f(rng.range(-1, 1));
      if (f != 0) U.row(i) += f * U.row(j);
    }
  }
  return U;
}

Fan transform_fan(const Fan& fan, const IntMatrix& U) {
  return Fan(fan.dim(), IntMatrix(U * fan.ray_matrix()), fan.max_cones());
}

TDivisor random_divisor(const Fan& fan, Rng& rng) {
  TDivisor D;
  D.coeffs = IntVector(fan.num_rays());
  for (int i = 0; i < fan.num_rays(); ++i) D.coeffs(i) = Int(rng.range(-3, 5));
  return D;
}

RationalPoint random_torus_point(const Fan& fan, int chart, Rng& rng) {
  RationalPoint P;
  P.chart = chart;
  P.y = RatVector(fan.dim());
  for (int i = 0; i < fan.dim(); ++i) {
    long p = 0;
    while (p == 0) p = rng.range(-30, 30);
    P.y(i) = frac(Int(p), Int(rng.range(1, 30)));
  }
  return P;
}

// standard Weil height of [1 : y_1 : ... : y_n]
Rat standard_height(const RatVector& y) {
  Int l = 1;
  for (int i = 0; i < y.size(); ++i) {
    Int d = rat_den(y(i));
    l = l / int_gcd(l, d) * d;
  }
  std::vector<Int> coords = {l};
  Int common = l;
  for (int i = 0; i < y.size(); ++i) {
    Rat cleared = y(i) * l;
    if (rat_den(cleared) != 1) fail(ErrorCode::Internal, "cleared denominator");
    coords.push_back(rat_num(cleared));
    common = int_gcd(common, coords.back());
  }
  Int mx = 0;
  for (const Int& c : coords) {
    Int v = int_abs(c) / common;
    if (v > mx) mx = v;
  }
  return Rat(mx);
}

struct Timer {
  Clock::time_point start = Clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

}  // namespace

std::vector<CriterionResult> run_acceptance(int jobs, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  auto record = [&](int num, const std::string& name, bool pass,
                    const std::string& detail, double secs) {
    out.push_back({num, name, pass, detail, secs});
  };

  Fan s7 = make_s7();
  TDivisor s7k = anticanonical(s7);
  SearchOptions opts;
  opts.jobs = jobs;

  // 1: S7 fixture
  {
    Timer tm;
    bool ok = true;
    std::ostringstream d;
    BetaResult b = beta(s7, s7k);
    ok &= b.beta == 2;
    AccumulatingLocus locus = accumulating_locus(s7, s7k);
    ok &= locus.components.size() == 2;
    for (const auto& c : locus.components) ok &= c.cardinality == 2;
    if (locus.components.size() == 2) {
      // components meet only at the unit point: disjoint free coordinates
      for (int f : locus.components[0].free_coords)
        for (int g : locus.components[1].free_coords) ok &= f != g;
    }
    DiagnosticsReport diag = diagnostics_star(s7, s7k);
    ok &= diag.all();
    double secs = tm.elapsed();
    ok &= secs < 1.0;
    d << "beta=" << b.beta << " components=" << locus.components.size()
      << " diagnostics=" << (diag.all() ? "pass" : "fail");
    record(1, "s7 fixture: beta, locus, diagnostics", ok, d.str(), secs);
  }

  // 2: S7 Liouville inequalities at the paper-chart normalization
  {
    Timer tm;
    AccumulatingLocus locus = accumulating_locus(s7, s7k);
    SearchOptions o = opts;
    o.chart = locus.sigma0;
    o.mode = HeightMode::ChartMonomial;
    o.monomial_chart = locus.sigma0;
    SearchMin m2 =
        liouville_search(s7, s7k, Rat(2), 40, nullptr, Place::inf(), o);
    SearchMin m3 =
        liouville_search(s7, s7k, Rat(3), 40, &locus, Place::inf(), o);
    bool ok2 = m2.any && value_at_least_one(m2.dist, m2.height, Rat(2));
    bool ok3 = m3.any && value_at_least_one(m3.dist, m3.height, Rat(3));
    double secs = tm.elapsed();
    bool ok = ok2 && ok3 && secs < 60.0;
    std::ostringstream d;
    d << "min d^2 H = " << (m2.any ? m2.value_decimal : "-")
      << ", min d^3 H off locus = " << (m3.any ? m3.value_decimal : "-");
    record(2, "s7 liouville: d^2 H >= 1, d^3 H >= 1 off locus", ok, d.str(),
           secs);
  }

  // 3: slope estimates
  {
    Timer tm;
    std::ostringstream d;
    bool ok = true;
    Schedule sched;
    sched.count = 21;  // denominators past 1e6

    Fan p2 = make_projective_space(2);
    TDivisor o1 = zero_divisor(p2);
    o1.coeffs(2) = 1;
    double t0 = tm.elapsed();
    SlopeEstimate e1 = estimate_alpha_on_curve(
        p2, o1,
        general_line(p2, 0, (RatVector(2) << Rat(1, 3), Rat(1, 5)).finished()),
        Place::inf(), sched);
    double t1 = tm.elapsed();
    ok &= std::abs(e1.gamma_hat - 1.0) <= 0.02 && (t1 - t0) < 5.0;

    AccumulatingLocus locus = accumulating_locus(s7, s7k);
    RatVector m = RatVector::Zero(2);
    m(locus.components[0].free_coords[0]) = Rat(1, 3);
    SlopeEstimate e2 = estimate_alpha_on_curve(
        s7, s7k, line_through_unit(s7, locus.sigma0, m), Place::inf(), sched);
    double t2 = tm.elapsed();
    ok &= std::abs(e2.gamma_hat - 2.0) <= 0.04 && (t2 - t1) < 5.0;

    SlopeEstimate e3 = estimate_alpha_on_curve(
        s7, s7k,
        general_line(s7, locus.sigma0,
                     (RatVector(2) << Rat(1, 3), Rat(1, 5)).finished()),
        Place::inf(), sched);
    double t3 = tm.elapsed();
    ok &= std::abs(e3.gamma_hat - 3.0) <= 0.06 && (t3 - t2) < 5.0;

    d << "p2 line " << e1.gamma_hat << ", s7 cpc line " << e2.gamma_hat
      << ", s7 general line " << e3.gamma_hat;
    record(3, "slope estimates: 1, 2, 3 within 2%", ok, d.str(), tm.elapsed());
  }

  // 4: Kleinschmidt closed forms
  {
    Timer tm;
    bool ok = true;
    std::ostringstream d;
    long want[3] = {4, 3, 4};  // F0, F1, F2
    for (long a = 0; a <= 2; ++a) {
      KleinschmidtData K = kleinschmidt_build(1, 1, {a});
      TDivisor mk = anticanonical(K.fan);
      EssConstant ess = ess_constant(K, mk);
      BetaResult b = beta(K.fan, mk);
      ok &= ess.value == want[a];
      ok &= b.beta == 2;
      ok &= ess.value > b.beta;
      ok &= very_free(K.fan, ess.cls);
      d << "F" << a << ": ess=" << ess.value << " beta=" << b.beta << "; ";
    }
    record(4, "kleinschmidt: alpha_ess 4/3/4 on F0/F1/F2, beta 2, strict", ok,
           d.str(), tm.elapsed());
  }

  // 5: splitting-type oracle suite
  {
    Timer tm;
    bool ok = true;
    std::ostringstream d;
    Fan p2 = make_projective_space(2);
    SplittingType line = splitting_type(
        p2, make_relation(p2, (IntVector(3) << 1, 1, 1).finished()), seed);
    ok &= line.degrees == std::vector<long>({1, 2});
    SplittingType cpc = splitting_type(
        s7, make_relation(s7, (IntVector(5) << 1, 0, 1, 0, 0).finished()),
        seed);
    ok &= cpc.degrees == std::vector<long>({0, 2});
    d << "p2 line {" << line.degrees[0] << "," << line.degrees[1] << "} s7 cpc {"
      << cpc.degrees[0] << "," << cpc.degrees[1] << "}";
    for (long a = 1; a <= 3; ++a) {
      KleinschmidtData K = kleinschmidt_build(1, 1, {a});
      SplittingType st = splitting_type(K.fan, K.C3, seed);
      std::vector<long> want = {std::min(a, 2L), std::max(a, 2L)};
      ok &= st.degrees == want;
      d << " F" << a << " C3 {" << st.degrees[0] << "," << st.degrees[1] << "}";
    }
    // 50 random positive relations across the corpus: very-free criterion
    // against mu_min of the computed splitting
    std::vector<std::pair<const Fan*, Relation>> pool;
    auto entries = corpus();
    for (const auto& e : entries)
      for (const Relation& c : enumerate_positive_relations(e.fan, 3))
        pool.push_back({&e.fan, c});
    Rng rng(seed ^ 0xabcdef);
    int checked = 0;
    for (int k = 0; k < 50 && !pool.empty(); ++k) {
      auto& [fanp, c] = pool[rng.next() % pool.size()];
      SplittingType st = splitting_type(*fanp, c, seed + (std::uint64_t)k);
      bool vf = very_free(*fanp, c);
      if (vf != (st.mu_min() >= 1)) ok = false;
      if (st.total() != c.total()) ok = false;
      ++checked;
    }
    d << "; " << checked << " random relations cross-checked";
    record(5, "splitting types match the very-free criterion", ok, d.str(),
           tm.elapsed());
  }

  // 6: Batyrev minimality
  {
    Timer tm;
    bool ok = true;
    std::ostringstream d;
    for (const auto& e : corpus()) {
      TDivisor mk = anticanonical(e.fan);
      PositivityReport pos = positivity(e.fan, mk);
      if (!pos.nef || !pos.big) continue;
      BetaResult b = beta(e.fan, mk);
      bool found = false;
      Int mn = 0;
      for (const Relation& c : enumerate_positive_relations(e.fan, 6)) {
        Int deg = deg_relation(e.fan, mk, c);
        if (!found || deg < mn) {
          mn = deg;
          found = true;
        }
      }
      if (!found || mn != b.beta) {
        ok = false;
        d << e.name << " FAILS ";
      }
    }
    if (ok) d << "min positive-relation degree equals beta on all corpus fans";
    record(6, "batyrev minimality over coefficient-6 relations", ok, d.str(),
           tm.elapsed());
  }

  // 7: hypothesis equivalence across the corpus
  {
    Timer tm;
    bool ok = true;
    std::ostringstream d;
    for (const auto& e : corpus()) {
      EffConeReport eff = effective_cone(e.fan);  // throws on disagreement
      if (e.name == "s6") {
        ok &= !eff.simplicial && !eff.sigma0.has_value();
        ok &= eff.extreme_classes.size() == 6;
      } else {
        ok &= eff.simplicial && eff.sigma0.has_value();
      }
      d << e.name << (eff.simplicial ? "+" : "-") << " ";
    }
    record(7, "(*) iff (**) on the corpus, s6 negative", ok, d.str(),
           tm.elapsed());
  }

  // 8: height consistency on projective spaces
  {
    Timer tm;
    bool ok = true;
    Rng rng(seed ^ 0x5151);
    for (int n : {2, 3}) {
      Fan pn = make_projective_space(n);
      TDivisor hyper = zero_divisor(pn);
      hyper.coeffs(n) = 1;
      HeightTable table = height_table(pn, hyper);
      for (int k = 0; k < 100; ++k) {
        RationalPoint P = random_torus_point(pn, 0, rng);
        if (salberger_height(pn, table, P) != standard_height(P.y)) ok = false;
      }
    }
    record(8, "salberger height = max-coordinate height on p2/p3", ok,
           "200 random points, exact equality", tm.elapsed());
  }

  // 9: Demazure vs wall curves
  {
    Timer tm;
    bool ok = true;
    Rng rng(seed ^ 0x99);
    for (const auto& e : corpus()) {
      std::vector<Wall> ws = walls(e.fan);
      std::vector<TDivisor> divs = {anticanonical(e.fan)};
      for (int k = 0; k < 20; ++k) divs.push_back(random_divisor(e.fan, rng));
      for (const TDivisor& D : divs) {
        PositivityReport pos = positivity(e.fan, D);
        bool wall_nef = true, wall_ample = true;
        for (const Wall& w : ws) {
          Int deg = deg_relation(e.fan, D, Relation{w.relation});
          if (deg < 0) wall_nef = false;
          if (deg <= 0) wall_ample = false;
        }
        if (pos.nef != wall_nef || pos.ample != wall_ample) ok = false;
      }
    }
    record(9, "demazure convexity = wall-curve degrees", ok,
           "corpus x (anticanonical + 20 random divisors)", tm.elapsed());
  }

  // 10: invariance suite
  {
    Timer tm;
    bool ok = true;
    Rng rng(seed ^ 0x1010);
    for (const auto& e : corpus()) {
      TDivisor mk = anticanonical(e.fan);
      PositivityReport pos0 = positivity(e.fan, mk);
      PicBasis pic0 = pic_basis(e.fan);
      std::optional<Int> beta0;
      if (pos0.nef && pos0.big) beta0 = beta(e.fan, mk).beta;
      for (int k = 0; k < 10; ++k) {
        Fan tf = transform_fan(e.fan, random_unimodular(e.fan.dim(), rng));
        TDivisor mkt = anticanonical(tf);
        PositivityReport pos1 = positivity(tf, mkt);
        ok &= pos0.nef == pos1.nef && pos0.ample == pos1.ample &&
              pos0.big == pos1.big;
        ok &= pic_basis(tf).r == pic0.r;
        if (beta0) ok &= beta(tf, mkt).beta == *beta0;
      }
    }
    // alpha_ess under relabeling of the rank-2 fans
    for (long a : {0L, 1L, 2L}) {
      KleinschmidtData K = kleinschmidt_build(1, 1, {a});
      EssConstant e0 = ess_constant(K, anticanonical(K.fan));
      for (int k = 0; k < 10; ++k) {
        KleinschmidtData Kt = K;
        Kt.fan = transform_fan(K.fan, random_unimodular(K.fan.dim(), rng));
        EssConstant e1 = ess_constant(Kt, anticanonical(Kt.fan));
        ok &= e0.value == e1.value;
      }
    }
    // heights are blind to the sign ambiguity of the lift
    {
      AccumulatingLocus locus = accumulating_locus(s7, s7k);
      HeightTable table = height_table(s7, s7k);
      Rng prng(seed ^ 0x77);
      for (int k = 0; k < 20; ++k) {
        RationalPoint P = random_torus_point(s7, locus.sigma0, prng);
        CoxPoint lift = cox_lift(s7, P);
        Rat h = salberger_height(s7, table, P);
        Rat best = 0;
        for (const auto& expo : table.exponents) {
          Rat v = 1;
          for (int i = 0; i < lift.X.size(); ++i)
            if (expo(i) != 0)
              v *= rat_pow(Rat(int_abs(lift.X(i))), expo(i).get_si());
          if (v > best) best = v;
        }
        ok &= best == h;
      }
    }
    record(10, "invariance under GL_n(Z) relabeling and lift signs", ok,
           "10 relabelings per fan; alpha_ess on rank-2; signed lifts", tm.elapsed());
  }

  return out;
}

}  // namespace toric
