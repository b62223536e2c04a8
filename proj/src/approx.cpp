#include "toric/approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

namespace toric {

namespace {

RationalPoint evaluate_on_curve(const Fan& fan, const IntMatrix& E,
                                const CurveFamily& curve, const Rat& t) {
  const int m = fan.num_rays();
  Rat u = rat_num(t), v = rat_den(t);
  std::vector<Rat> X((std::size_t)m);
  for (int j = 0; j < m; ++j) {
    X[(std::size_t)j] = curve.polys[(std::size_t)j].eval(u, v);
    if (X[(std::size_t)j] == 0) return RationalPoint{};  // boundary hit
  }
  RationalPoint P;
  P.chart = curve.chart;
  P.y = RatVector(fan.dim());
  for (int i = 0; i < fan.dim(); ++i) {
    Rat y = 1;
    for (int j = 0; j < m; ++j) {
      long e = E(i, j).get_si();
      if (e != 0) y *= rat_pow(X[(std::size_t)j], e);
    }
    P.y(i) = y;
  }
  return P;
}

}  // namespace

ApproachSequence approach_sequence(const Fan& fan, const TDivisor& D,
                                   const CurveFamily& curve, const Place& place,
                                   const Schedule& schedule) {
  fan.require_smooth_complete();
  IntMatrix E = chart_exponents(fan, curve.chart);
  // the curve has to pass through the unit point at one end of P^1
  {
    RationalPoint base = evaluate_on_curve(fan, E, curve, Rat(0));
    if (base.chart < 0 || !is_unit_point(base)) {
      RationalPoint inf_end =
          evaluate_on_curve(fan, E, curve.reparametrized(), Rat(0));
      if (inf_end.chart < 0 || !is_unit_point(inf_end))
        fail(ErrorCode::CurveMissesQ0,
             "lift does not hit (1,...,1) at either end");
    }
  }

  HeightTable table = height_table(fan, D);
  ApproachSequence seq;
  Rat t = schedule.t0;
  for (int k = 0; k < schedule.count; ++k, t = t * schedule.ratio) {
    RationalPoint P = evaluate_on_curve(fan, E, curve, t);
    if (P.chart < 0 || is_unit_point(P)) continue;
    ApproachPoint ap;
    ap.t = t;
    ap.dist = distance(P, place);
    // capped or vanishing distances are not part of the approach tail
    if (ap.dist == 0 || ap.dist >= 1) continue;
    ap.height = salberger_height(fan, table, P);
    ap.P = std::move(P);
    seq.points.push_back(std::move(ap));
  }
  return seq;
}

SlopeEstimate estimate_alpha_on_curve(const Fan& fan, const TDivisor& D,
                                      const CurveFamily& curve,
                                      const Place& place,
                                      const Schedule& schedule) {
  ApproachSequence seq = approach_sequence(fan, D, curve, place, schedule);
  const int total = (int)seq.points.size();
  if (total < 3) fail(ErrorCode::BadInput, "schedule produced too few points");
  const int window = std::min(20, total);
  SlopeEstimate est;
  est.window = window;
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<std::pair<long double, long double>> pts;
  for (int k = total - window; k < total; ++k) {
    long double x = -log_rat(seq.points[(std::size_t)k].dist);
    long double y = log_rat(seq.points[(std::size_t)k].height);
    pts.push_back({x, y});
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  long double denom = (long double)window * sxx - sx * sx;
  if (denom == 0) fail(ErrorCode::BadInput, "degenerate regression window");
  long double slope = ((long double)window * sxy - sx * sy) / denom;
  long double intercept = (sy - slope * sx) / (long double)window;
  long double ss = 0;
  for (auto& [x, y] : pts) {
    long double r = y - (slope * x + intercept);
    ss += r * r;
  }
  est.gamma_hat = (double)slope;
  est.residual = (double)std::sqrt((double)(ss / (long double)window));
  return est;
}

int compare_search_values(const Rat& d1, const Rat& h1, const Rat& d2,
                          const Rat& h2, const Rat& gamma) {
  long a = rat_num(gamma).get_si();
  long b = rat_den(gamma).get_si();
  Rat lhs = rat_pow(d1, a) * rat_pow(h1, b);
  Rat rhs = rat_pow(d2, a) * rat_pow(h2, b);
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

bool value_at_least_one(const Rat& d, const Rat& h, const Rat& gamma) {
  long a = rat_num(gamma).get_si();
  long b = rat_den(gamma).get_si();
  return rat_pow(d, a) * rat_pow(h, b) >= 1;
}

namespace {

std::vector<Rat> box_fractions(long B) {
  std::vector<Rat> out;
  for (long q = 1; q <= B; ++q)
    for (long p = -B; p <= B; ++p) {
      if (p == 0) continue;
      Int g = int_gcd(Int(p < 0 ? -p : p), Int(q));
      if (g != 1) continue;
      out.push_back(frac(p, q));
    }
  return out;
}

bool lex_less(const RatVector& a, const RatVector& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

struct Incumbent {
  bool any = false;
  Rat d, h;
  RatVector y;
  Int pow_num, pow_den;  // d^a h^b as an exact fraction (not reduced)
  Int t1, t2, t3, t4;    // scratch

  void power_into(const Rat& nd, const Rat& nh, long a, long b, Int& vn,
                  Int& vd) {
    mpz_pow_ui(t1.get_mpz_t(), rat_num(nd).get_mpz_t(), (unsigned long)a);
    mpz_pow_ui(t2.get_mpz_t(), rat_num(nh).get_mpz_t(), (unsigned long)b);
    vn = t1 * t2;
    mpz_pow_ui(t1.get_mpz_t(), rat_den(nd).get_mpz_t(), (unsigned long)a);
    mpz_pow_ui(t2.get_mpz_t(), rat_den(nh).get_mpz_t(), (unsigned long)b);
    vd = t1 * t2;
  }

  template <typename MakeY>
  void offer(const Rat& nd, const Rat& nh, MakeY&& make_y, long a, long b) {
    power_into(nd, nh, a, b, t3, t4);
    if (any) {
      t1 = t3 * pow_den;
      t2 = pow_num * t4;
      int cmp = mpz_cmp(t1.get_mpz_t(), t2.get_mpz_t());
      if (cmp > 0) return;
      if (cmp == 0) {
        RatVector ny = make_y();
        if (!lex_less(ny, y)) return;
        d = nd;
        h = nh;
        y = std::move(ny);
        pow_num = t3;
        pow_den = t4;
        return;
      }
    }
    any = true;
    d = nd;
    h = nh;
    y = make_y();
    pow_num = t3;
    pow_den = t4;
  }
  void merge(const Incumbent& o) {
    if (!o.any) return;
    if (any) {
      Int lhs = o.pow_num * pow_den, rhs = pow_num * o.pow_den;
      int cmp = mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
      if (cmp > 0 || (cmp == 0 && !lex_less(o.y, y))) return;
    }
    any = o.any;
    d = o.d;
    h = o.h;
    y = o.y;
    pow_num = o.pow_num;
    pow_den = o.pow_den;
  }
};

}  // namespace

SearchMin liouville_search(const Fan& fan, const TDivisor& D, const Rat& gamma,
                           long box, const AccumulatingLocus* excluded,
                           const Place& place, const SearchOptions& options,
                           std::vector<SearchRow>* dump) {
  fan.require_smooth_complete();
  if (box < 1) fail(ErrorCode::BadInput, "box bound must be positive");
  if (excluded && excluded->sigma0 != options.chart)
    fail(ErrorCode::BadInput, "excluded locus lives in a different chart");
  HeightTable table = height_table(fan, D);
  IntVector monomial;
  if (options.mode == HeightMode::ChartMonomial) {
    int s = options.monomial_chart >= 0 ? options.monomial_chart : options.chart;
    monomial = d_sigma(fan, D, s).coeffs;
  }
  for (int s = 0; s < fan.num_cones(); ++s) fan.cone_dual(s);  // warm caches

  const int n = fan.dim();
  std::vector<Rat> fracs = box_fractions(box);
  const long a = rat_num(gamma).get_si();
  const long b = rat_den(gamma).get_si();
  if (b <= 0 || gamma <= 0) fail(ErrorCode::BadInput, "gamma must be positive");

  // per-fraction data shared by every point of the scan
  std::vector<CoordinateValuations> fvals;
  std::vector<Rat> fdist;  // |y - 1| at the place, uncapped
  std::vector<char> fis1;
  fvals.reserve(fracs.size());
  fdist.reserve(fracs.size());
  for (const Rat& y : fracs) {
    fvals.push_back(coordinate_valuations(y));
    fdist.push_back(abs_place(y - 1, place));
    fis1.push_back(y == 1 ? 1 : 0);
  }
  std::vector<unsigned long> mono_ui;
  if (options.mode == HeightMode::ChartMonomial)
    for (int i = 0; i < fan.num_rays(); ++i) mono_ui.push_back(monomial(i).get_ui());

  // locus components as masks over chart coordinates: bit set = pinned at 1
  std::vector<unsigned> pinned_masks;
  if (excluded)
    for (const auto& comp : excluded->components) {
      unsigned mask = 0;
      for (int k = 0; k < n; ++k) {
        bool free_coord =
            std::find(comp.free_coords.begin(), comp.free_coords.end(), k) !=
            comp.free_coords.end();
        if (!free_coord) mask |= 1u << k;
      }
      pinned_masks.push_back(mask);
    }

  // interleaved first-coordinate assignment: the table is sorted by
  // denominator, so contiguous chunks would be badly unbalanced
  auto scan_stride = [&](std::size_t start, std::size_t stride, Incumbent& best,
                         std::vector<SearchRow>* rows) {
    std::vector<std::size_t> idx((std::size_t)n, 0);
    std::vector<const CoordinateValuations*> coord((std::size_t)n);
    Int acc, power;
    LiftScratch lift_sc;
    Rat dist_sc, h_sc;
    auto make_y = [&]() {
      RatVector y(n);
      for (int k = 0; k < n; ++k) y(k) = fracs[idx[(std::size_t)k]];
      return y;
    };
    for (std::size_t first = start; first < fracs.size(); first += stride) {
      idx.assign((std::size_t)n, 0);
      idx[0] = first;
      coord[0] = &fvals[first];
      while (true) {
        for (int k = 1; k < n; ++k)
          coord[(std::size_t)k] = &fvals[idx[(std::size_t)k]];
        unsigned ones_mask = 0;
        for (int k = 0; k < n; ++k)
          if (fis1[idx[(std::size_t)k]]) ones_mask |= 1u << k;
        bool skip = ones_mask == (1u << n) - 1;  // the unit point itself
        if (!skip)
          for (unsigned mask : pinned_masks)
            if ((ones_mask & mask) == mask) {
              skip = true;
              break;
            }
        if (!skip) {
          Rat& d = dist_sc;
          d = 0;
          for (int k = 0; k < n; ++k)
            if (fdist[idx[(std::size_t)k]] > d) d = fdist[idx[(std::size_t)k]];
          if (d > 1) d = 1;
          if (d != 0) {
            const IntVector& X = lift_magnitudes(fan, options.chart, coord, lift_sc);
            Rat& h = h_sc;
            if (options.mode == HeightMode::Salberger) {
              h = height_from_magnitudes(table, X);
            } else {
              acc = 1;
              for (int i = 0; i < X.size(); ++i) {
                if (mono_ui[(std::size_t)i] == 0) continue;
                mpz_pow_ui(power.get_mpz_t(), X(i).get_mpz_t(),
                           mono_ui[(std::size_t)i]);
                acc *= power;
              }
              h = Rat(acc);
            }
            best.offer(d, h, make_y, a, b);
            if (rows) rows->push_back({make_y(), d, h});
          }
        }
        int k = n - 1;
        while (k >= 1 && idx[(std::size_t)k] + 1 == fracs.size()) {
          idx[(std::size_t)k] = 0;
          --k;
        }
        if (k < 1) break;
        ++idx[(std::size_t)k];
      }
    }
  };

  Incumbent best;
  int jobs = std::max(1, options.jobs);
  if (jobs == 1 || dump) {
    scan_stride(0, 1, best, dump);
  } else {
    std::vector<Incumbent> local((std::size_t)jobs);
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w)
      threads.emplace_back([&, w] {
        scan_stride((std::size_t)w, (std::size_t)jobs, local[(std::size_t)w],
                    nullptr);
      });
    for (auto& t : threads) t.join();
    for (const auto& l : local) best.merge(l);
  }

  SearchMin out;
  out.any = best.any;
  if (best.any) {
    out.dist = best.d;
    out.height = best.h;
    out.argmin = best.y;
    if (b == 1) out.value = frac(best.pow_num, best.pow_den);
    long double lv = (long double)a * log_rat(best.d) / (long double)b +
                     log_rat(best.h);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", (double)std::exp((double)lv));
    out.value_decimal = buf;
  }
  return out;
}

namespace {

// scan restricted to the locus itself: free coordinates range over the box,
// the others pinned at 1
Incumbent locus_scan(const Fan& fan, const HeightTable& table,
                     const AccumulatingLocus& locus, long box,
                     const Place& place, const Rat& gamma) {
  const int n = fan.dim();
  std::vector<Rat> fracs;
  for (long q = 1; q <= box; ++q)
    for (long p = -box; p <= box; ++p) {
      if (p == 0) continue;
      if (int_gcd(Int(p < 0 ? -p : p), Int(q)) != 1) continue;
      fracs.push_back(frac(p, q));
    }
  const long a = rat_num(gamma).get_si();
  const long b = rat_den(gamma).get_si();
  Incumbent best;
  for (const auto& comp : locus.components) {
    const int f = (int)comp.free_coords.size();
    std::vector<std::size_t> idx((std::size_t)f, 0);
    RationalPoint P;
    P.chart = locus.sigma0;
    while (true) {
      P.y = RatVector::Constant(n, Rat(1));
      for (int k = 0; k < f; ++k)
        P.y(comp.free_coords[(std::size_t)k]) = fracs[idx[(std::size_t)k]];
      if (!is_unit_point(P)) {
        Rat d = distance(P, place);
        if (d != 0) {
          Rat h = salberger_height(fan, table, P);
          best.offer(d, h, [&] { return P.y; }, a, b);
        }
      }
      int k = f - 1;
      while (k >= 0 && idx[(std::size_t)k] + 1 == fracs.size()) {
        idx[(std::size_t)k] = 0;
        --k;
      }
      if (k < 0) break;
      ++idx[(std::size_t)k];
    }
  }
  return best;
}

BoxMin to_box_min(long box, const Incumbent& inc, const Rat& gamma) {
  BoxMin bm;
  bm.box = box;
  bm.any = inc.any;
  if (inc.any) {
    bm.dist = inc.d;
    bm.height = inc.h;
    long double lv =
        (long double)rat_num(gamma).get_si() * log_rat(inc.d) /
            (long double)rat_den(gamma).get_si() +
        log_rat(inc.h);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", (double)std::exp((double)lv));
    bm.value_decimal = buf;
  }
  return bm;
}

}  // namespace

AccumulationReport verify_accumulation(const Fan& fan, const TDivisor& D,
                                       const AccumulatingLocus& locus, long box,
                                       const Place& place,
                                       const SearchOptions& options) {
  AccumulationReport rep;
  rep.beta = locus.beta;
  HeightTable table = height_table(fan, D);
  std::vector<long> boxes = {std::max(2L, box / 4), std::max(2L, box / 2), box};

  Rat beta_rat(locus.beta);
  for (long bsize : boxes) {
    Incumbent inc = locus_scan(fan, table, locus, bsize, place, beta_rat);
    rep.on_locus.push_back(to_box_min(bsize, inc, beta_rat));
  }

  SearchOptions opt = options;
  opt.chart = locus.sigma0;
  for (Rat delta : {Rat(1, 4), Rat(1, 2), Rat(1)}) {
    DeltaRow row;
    row.delta = delta;
    Rat gamma = beta_rat + delta;
    std::vector<SearchMin> mins;
    for (long bsize : boxes) {
      SearchMin m =
          liouville_search(fan, D, gamma, bsize, &locus, place, opt, nullptr);
      Incumbent inc;
      if (m.any) {
        inc.any = true;
        inc.d = m.dist;
        inc.h = m.height;
        inc.y = m.argmin;
      }
      row.boxes.push_back(to_box_min(bsize, inc, gamma));
      mins.push_back(std::move(m));
    }
    const SearchMin& last = mins[2];
    const SearchMin& mid = mins[1];
    bool stabilized = last.any && mid.any &&
                      compare_search_values(mid.dist, mid.height, last.dist,
                                            last.height, gamma) == 0;
    bool bounded = last.any && value_at_least_one(last.dist, last.height, gamma);
    row.pass = !last.any || stabilized || bounded;
    if (row.pass) rep.pass = true;
    rep.off_locus.push_back(std::move(row));
  }
  return rep;
}

}  // namespace toric
