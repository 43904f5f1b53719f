#pragma once

#include <cmath>

#include "hidden/types.hpp"

namespace hidden::detail {

inline constexpr int kGoldenIterations = 80;
inline constexpr int kBisectIterations = 60;

struct GoldenMin {
  double t;
  double value;
};

// Minimizes a convex function of t on [0, 1]. The endpoints are evaluated too,
// so a minimum sitting at t = 0 or t = 1 is found exactly.
template <class F>
GoldenMin golden_minimize(F&& f) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = 1.0;
  double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
  double fc = f(c), fd = f(d);
  GoldenMin best{0.0, f(0.0)};
  auto consider = [&](double t, double v) {
    if (v < best.value) best = {t, v};
  };
  consider(1.0, f(1.0));
  for (int it = 0; it < kGoldenIterations; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + phi * (hi - lo);
      fd = f(d);
    }
  }
  consider(c, fc);
  consider(d, fd);
  return best;
}

// Given pred(inside) = true and pred(outside) = false, moves toward the switch.
template <class P>
double bisect_edge(P&& pred, double inside, double outside) {
  for (int it = 0; it < kBisectIterations; ++it) {
    double mid = 0.5 * (inside + outside);
    if (pred(mid)) inside = mid;
    else outside = mid;
  }
  return inside;
}

/**
 * Segment test for a body given by a convex violation function v (body =
 * {v <= 0}). Closed mode hits when min v <= tol, open-interior mode when
 * min v < -tol. The interval ends are located by bisection from the minimizer.
 */
template <class V>
HitResult<double> golden_segment(const Segment<double>& s, V&& violation, SegmentMode mode, double tol) {
  auto f = [&](double t) { return violation(s.at(t)); };
  const GoldenMin m = golden_minimize(f);
  const double threshold = mode == SegmentMode::closed ? tol : -tol;
  auto good = [&](double t) {
    double v = f(t);
    return mode == SegmentMode::closed ? v <= threshold : v < threshold;
  };
  HitResult<double> out;
  if (!good(m.t)) return out;
  out.hit = true;
  out.t_lo = good(0.0) ? 0.0 : bisect_edge(good, m.t, 0.0);
  out.t_hi = good(1.0) ? 1.0 : bisect_edge(good, m.t, 1.0);
  out.witness_t = m.t;
  out.witness = s.at(m.t);
  return out;
}

}  // namespace hidden::detail
