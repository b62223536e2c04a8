#pragma once

#include "toric/arith.hpp"
#include "toric/collections.hpp"
#include "toric/curves.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace toric {

// Geometric parameter schedule t_k = t0 * ratio^k, k = 0..count-1. The
// schedule has to approach the parameter where the curve meets (1,...,1).
struct Schedule {
  Rat t0 = Rat(1, 2);
  Rat ratio = Rat(1, 2);
  int count = 21;
};

struct ApproachPoint {
  Rat t;
  RationalPoint P;
  Rat dist;
  Rat height;
};

struct ApproachSequence {
  std::vector<ApproachPoint> points;
};

// Evaluate the lift along the schedule, drop boundary hits, compute exact
// distance/height pairs.
ApproachSequence approach_sequence(const Fan& fan, const TDivisor& D,
                                   const CurveFamily& curve, const Place& place,
                                   const Schedule& schedule);

struct SlopeEstimate {
  double gamma_hat = 0;
  int window = 0;
  double residual = 0;
};

// Least squares of log H against -log d over the tail window (last 20
// points); logs at extended precision, everything upstream exact.
SlopeEstimate estimate_alpha_on_curve(const Fan& fan, const TDivisor& D,
                                      const CurveFamily& curve,
                                      const Place& place,
                                      const Schedule& schedule);

enum class HeightMode { Salberger, ChartMonomial };

struct SearchOptions {
  int chart = 0;                        // chart whose coordinates are scanned
  HeightMode mode = HeightMode::Salberger;
  int monomial_chart = -1;              // for HeightMode::ChartMonomial
  int jobs = 1;
};

struct SearchRow {
  RatVector y;
  Rat dist;
  Rat height;
};

struct SearchMin {
  bool any = false;
  Rat dist, height;        // of the argmin; the minimum value is d^gamma * H
  RatVector argmin;
  std::optional<Rat> value;  // exact when gamma is an integer
  std::string value_decimal;
};

// Exhaustive scan over torus points whose chart coordinates are reduced
// fractions with |numerator|, denominator <= box. Points on `excluded` are
// skipped; exact minimum of d^gamma * H, ties resolved to the
// lexicographically smallest point so the result ignores scan order.
SearchMin liouville_search(const Fan& fan, const TDivisor& D, const Rat& gamma,
                           long box, const AccumulatingLocus* excluded,
                           const Place& place, const SearchOptions& options,
                           std::vector<SearchRow>* dump = nullptr);

// d1^gamma h1 vs d2^gamma h2, exactly.
int compare_search_values(const Rat& d1, const Rat& h1, const Rat& d2,
                          const Rat& h2, const Rat& gamma);
// d^gamma h >= 1?
bool value_at_least_one(const Rat& d, const Rat& h, const Rat& gamma);

struct BoxMin {
  long box = 0;
  bool any = false;
  Rat dist, height;
  std::string value_decimal;
};

struct DeltaRow {
  Rat delta;
  std::vector<BoxMin> boxes;  // nested, ascending
  bool pass = false;
};

struct AccumulationReport {
  Int beta;
  std::vector<BoxMin> on_locus;   // min d^beta H restricted to the locus
  std::vector<DeltaRow> off_locus;
  bool pass = false;
};

// (i) minima of d^beta H on the locus, (ii) minima of d^(beta+delta) H off
// the locus for delta in {1/4, 1/2, 1} over nested boxes; a delta passes when
// its minima stabilize across the last two boxes or stay >= 1 outright.
AccumulationReport verify_accumulation(const Fan& fan, const TDivisor& D,
                                       const AccumulatingLocus& locus, long box,
                                       const Place& place,
                                       const SearchOptions& options);

}  // namespace toric
