#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "hidden/golden.hpp"
#include "hidden/types.hpp"

namespace hidden {

/**
 * A convex body known only through a membership callback.
 *
 * The callback must classify points within its own band (default 1e-7) and
 * must be reentrant: segment tests call it from whatever thread evaluates
 * them. Geometry beyond membership goes through the gauge of the body about
 * the reference interior point p0,
 *
 *   rho(x) = inf { l > 0 : p0 + (x - p0) / l in C },
 *
 * which is convex, so segment tests can minimize rho - 1 by golden section.
 * Each gauge evaluation is a bisection over membership calls.
 */
class OracleBody {
 public:
  using Callback = std::function<Membership(const Point<double>&)>;

  static constexpr double kDefaultBand = 1e-7;

  OracleBody(Callback membership, Point<double> reference_interior, double band = kDefaultBand)
      : membership_(std::move(membership)), p0_(std::move(reference_interior)), band_(band) {
    if (!membership_) throw Error("oracle body needs a membership callback");
    if (!(band_ >= 0.0)) throw Error("oracle band must be nonnegative");
    if (membership_(p0_) != Membership::inside) throw Error("reference point is not inside the oracle body");
  }

  std::size_t dim() const { return p0_.dim(); }
  const Point<double>& reference() const { return p0_; }
  double band() const { return band_; }

  Membership classify(const Point<double>& x) const {
    require_same_dim(dim(), x.dim());
    return membership_(x);
  }

  /// Largest s with p0 + s u in the body (+inf when the ray never leaves it).
  double ray_exit(const Point<double>& u) const {
    auto in = [&](double s) { return in_body(membership_(p0_ + s * u)); };
    double lo = 0.0, hi = 1.0;
    int doublings = 0;
    while (in(hi)) {
      lo = hi;
      hi *= 2.0;
      if (++doublings > 80) return std::numeric_limits<double>::infinity();
    }
    return detail::bisect_edge(in, lo, hi);
  }

  double gauge(const Point<double>& x) const {
    Point<double> v = x - p0_;
    if (norm(v) == 0.0) return 0.0;
    double s = ray_exit(v);
    return std::isinf(s) ? 0.0 : 1.0 / s;
  }

 private:
  Callback membership_;
  Point<double> p0_;
  double band_;
};

/// The tolerance is carried by the callback's own band; tol only validates.
inline Membership contains(const OracleBody& o, const Point<double>& x, double tol = kDefaultTol) {
  check_tolerance<double>(tol);
  return o.classify(x);
}

inline Membership contains_relative(const OracleBody& o, const Point<double>& x, double tol = kDefaultTol) {
  return contains(o, x, tol);
}

inline Point<double> interior_point(const OracleBody& o) { return o.reference(); }

/// Ray bisection from the reference point along dir.
inline Point<double> boundary_point_in_direction(const OracleBody& o, const Point<double>& dir) {
  require_same_dim(o.dim(), dir.dim());
  Point<double> u = normalized(dir);
  double s = o.ray_exit(u);
  if (std::isinf(s)) throw Error("unbounded direction");
  return o.reference() + s * u;
}

/// Normalized central-difference gradient of the gauge.
inline SupportFunctional<double> support_functional(const OracleBody& o, const Point<double>& x,
                                                    double tol = kDefaultTol) {
  if (contains(o, x, tol) != Membership::boundary) throw Error("support_functional: point is not on the boundary");
  const double h = 1e-5 * std::max(1.0, norm(x - o.reference()));
  std::vector<double> g(o.dim());
  for (std::size_t i = 0; i < o.dim(); ++i) {
    Point<double> e = Point<double>::unit(o.dim(), i);
    g[i] = (o.gauge(x + h * e) - o.gauge(x - h * e)) / (2.0 * h);
  }
  Point<double> y = normalized(Point<double>(std::move(g)));
  return {y, dot(y, x)};
}

inline HitResult<double> segment_meets(const OracleBody& o, const Segment<double>& s, SegmentMode mode,
                                       double tol = kDefaultTol) {
  require_same_dim(o.dim(), s.dim());
  check_tolerance<double>(tol);
  return detail::golden_segment(s, [&](const Point<double>& x) { return o.gauge(x) - 1.0; }, mode, tol);
}

inline bool segment_hits(const OracleBody& o, const Point<double>& a, const Point<double>& b, SegmentMode mode,
                         double tol = kDefaultTol) {
  return segment_meets(o, Segment<double>(a, b), mode, tol).hit;
}

}  // namespace hidden
