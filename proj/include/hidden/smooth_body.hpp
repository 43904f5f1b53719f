#pragma once

#include <cmath>

#include "hidden/point.hpp"
#include "hidden/types.hpp"

namespace hidden {

/**
 * Ball {|x - c| <= r} or ellipsoid {(x - c)^T Q (x - c) <= 1} with Q symmetric
 * positive definite. Both are stored as an ellipsoid with Cholesky factor
 * Q = L L^T; u = L^T (x - c) maps the body onto the closed unit ball.
 *
 * The boundary band is measured by excess(x) = scale * (|u| - 1), which is the
 * signed distance to the sphere for balls (scale = r) and the gauge offset
 * for general ellipsoids (scale = 1).
 */
class SmoothBody {
 public:
  enum class Kind { ball, ellipsoid };

  static SmoothBody ball(Point<double> center, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw Error("ball radius must be positive and finite");
    const std::size_t d = center.dim();
    Matrix<double> q(d, d), l(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      q(i, i) = 1.0 / (radius * radius);
      l(i, i) = 1.0 / radius;
    }
    return SmoothBody(Kind::ball, std::move(center), std::move(q), std::move(l), radius);
  }

  static SmoothBody ellipsoid(Point<double> center, Matrix<double> q) {
    const std::size_t d = center.dim();
    if (q.rows() != d || q.cols() != d) throw Error("ellipsoid shape matrix must be d x d");
    double scale = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (!std::isfinite(q(i, j))) throw Error("ellipsoid shape matrix must be finite");
        scale = std::max(scale, std::abs(q(i, j)));
      }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (std::abs(q(i, j) - q(j, i)) > 1e-12 * scale) throw Error("ellipsoid shape matrix must be symmetric");
    Matrix<double> l(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      double diag = q(j, j);
      for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
      if (!(diag > 1e-14 * scale)) throw Error("ellipsoid shape matrix must be positive definite");
      l(j, j) = std::sqrt(diag);
      for (std::size_t i = j + 1; i < d; ++i) {
        double v = q(i, j);
        for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
        l(i, j) = v / l(j, j);
      }
    }
    return SmoothBody(Kind::ellipsoid, std::move(center), std::move(q), std::move(l), 0.0);
  }

  Kind kind() const { return kind_; }
  std::size_t dim() const { return center_.dim(); }
  const Point<double>& center() const { return center_; }
  /// Radius of a ball; zero for a general ellipsoid.
  double radius() const { return radius_; }
  const Matrix<double>& shape() const { return q_; }

  /// u = L^T (x - c)
  Point<double> whiten(const Point<double>& x) const {
    require_same_dim(dim(), x.dim());
    return whiten_vector(x - center_);
  }
  Point<double> whiten_vector(const Point<double>& v) const {
    std::vector<double> u(dim(), 0.0);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t k = i; k < dim(); ++k) u[i] += l_(k, i) * v[k];
    return Point<double>(std::move(u));
  }
  /// L n, the x-space normal of the u-space normal n.
  Point<double> normal_from_whitened(const Point<double>& n) const {
    std::vector<double> y(dim(), 0.0);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t k = 0; k <= i; ++k) y[i] += l_(i, k) * n[k];
    return Point<double>(std::move(y));
  }
  /// Q^{-1} v via two triangular solves.
  Point<double> solve_shape(const Point<double>& v) const {
    const std::size_t d = dim();
    std::vector<double> z(d), w(d);
    for (std::size_t i = 0; i < d; ++i) {
      double s = v[i];
      for (std::size_t k = 0; k < i; ++k) s -= l_(i, k) * z[k];
      z[i] = s / l_(i, i);
    }
    for (std::size_t i = d; i-- > 0;) {
      double s = z[i];
      for (std::size_t k = i + 1; k < d; ++k) s -= l_(k, i) * w[k];
      w[i] = s / l_(i, i);
    }
    return Point<double>(std::move(w));
  }

  double gauge(const Point<double>& x) const { return norm(whiten(x)); }
  double excess(const Point<double>& x) const { return scale() * (gauge(x) - 1.0); }
  double scale() const { return kind_ == Kind::ball ? radius_ : 1.0; }

  /// sup <C, y>
  double support_value(const Point<double>& y) const {
    return dot(center_, y) + std::sqrt(std::max(0.0, dot(y, solve_shape(y))));
  }

 private:
  SmoothBody(Kind k, Point<double> c, Matrix<double> q, Matrix<double> l, double r)
      : kind_(k), center_(std::move(c)), q_(std::move(q)), l_(std::move(l)), radius_(r) {}

  Kind kind_;
  Point<double> center_;
  Matrix<double> q_;
  Matrix<double> l_;
  double radius_;
};

inline Membership contains(const SmoothBody& s, const Point<double>& x, double tol = kDefaultTol) {
  check_tolerance<double>(tol);
  double e = s.excess(x);
  if (e < -tol) return Membership::inside;
  if (e <= tol) return Membership::boundary;
  return Membership::outside;
}

inline Membership contains_relative(const SmoothBody& s, const Point<double>& x, double tol = kDefaultTol) {
  return contains(s, x, tol);
}

inline Point<double> interior_point(const SmoothBody& s) { return s.center(); }

/// The unique supporting functional: the normalized gradient of the quadratic.
inline SupportFunctional<double> support_functional(const SmoothBody& s, const Point<double>& x,
                                                    double tol = kDefaultTol) {
  if (contains(s, x, tol) != Membership::boundary) throw Error("support_functional: point is not on the boundary");
  Point<double> g = s.shape() * (x - s.center());
  Point<double> y = normalized(g);
  return {y, dot(y, x)};
}

/// c + Q^{-1} dir / sqrt(dir^T Q^{-1} dir), the maximizer of <dir, .>.
inline Point<double> boundary_point_in_direction(const SmoothBody& s, const Point<double>& dir) {
  require_same_dim(s.dim(), dir.dim());
  Point<double> w = s.solve_shape(dir);
  double h = dot(dir, w);
  if (!(h > 0.0)) throw Error("direction must be nonzero");
  return s.center() + w / std::sqrt(h);
}

/// Closed-form minimization of the quadratic gauge along the segment.
inline HitResult<double> segment_meets(const SmoothBody& s, const Segment<double>& seg, SegmentMode mode,
                                       double tol = kDefaultTol) {
  require_same_dim(s.dim(), seg.dim());
  check_tolerance<double>(tol);
  const Point<double> p = s.whiten(seg.a);
  const Point<double> q = s.whiten_vector(seg.b - seg.a);
  const double qq = dot(q, q), pq = dot(p, q), pp = dot(p, p);
  double t_star = qq > 0.0 ? std::clamp(-pq / qq, 0.0, 1.0) : 0.0;
  const Point<double> u_star = p + t_star * q;
  const double g_min = norm(u_star);
  const double e_min = s.scale() * (g_min - 1.0);
  HitResult<double> out;
  const bool hit = mode == SegmentMode::closed ? e_min <= tol : e_min < -tol;
  if (!hit) {
    if (g_min > 0.0) {
      Point<double> y = normalized(s.normal_from_whitened(u_star / g_min));
      SupportFunctional<double> sep{y, s.support_value(y)};
      if (sep.value(seg.a) - sep.offset > 0.0 && sep.value(seg.b) - sep.offset > 0.0) out.separator = sep;
    }
    return out;
  }
  out.hit = true;
  double lo = t_star, hi = t_star;
  if (qq > 0.0) {
    const double disc = pq * pq - qq * (pp - 1.0);
    if (disc > 0.0) {
      const double r = std::sqrt(disc);
      lo = std::max(0.0, (-pq - r) / qq);
      hi = std::min(1.0, (-pq + r) / qq);
      if (lo > hi) lo = hi = t_star;
    }
  } else {
    lo = 0.0;
    hi = 1.0;
  }
  out.t_lo = lo;
  out.t_hi = hi;
  out.witness_t = lo < hi ? 0.5 * (lo + hi) : t_star;
  out.witness = seg.at(out.witness_t);
  return out;
}

inline bool segment_hits(const SmoothBody& s, const Point<double>& a, const Point<double>& b, SegmentMode mode,
                         double tol = kDefaultTol) {
  return segment_meets(s, Segment<double>(a, b), mode, tol).hit;
}

}  // namespace hidden
