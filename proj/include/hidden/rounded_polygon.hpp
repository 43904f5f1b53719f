#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "hidden/golden.hpp"
#include "hidden/types.hpp"

namespace hidden {

namespace detail {

inline double cross(const Point<double>& o, const Point<double>& a, const Point<double>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; counter-clockwise, collinear points dropped.
inline std::vector<Point<double>> convex_hull_2d(std::vector<Point<double>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point<double>> hull;
  hull.reserve(2 * pts.size());
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t start = hull.size();
    for (const auto& p : pts) {
      while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0.0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  return hull;
}

}  // namespace detail

/**
 * Minkowski sum of a convex polygon (the core) and a closed disk of radius r.
 * Its boundary alternates between straight edges (translates of the core
 * edges by r times their outward normal) and circular arcs around the core
 * vertices.
 */
class RoundedPolygon {
 public:
  RoundedPolygon(std::vector<Point<double>> vertices, double radius) : radius_(radius) {
    if (vertices.empty()) throw Error("rounded polygon needs at least one vertex");
    for (const auto& v : vertices) require_same_dim(2, v.dim());
    if (!(radius > 0.0) || !std::isfinite(radius)) throw Error("rounding radius must be positive and finite");
    core_ = detail::convex_hull_2d(std::move(vertices));
  }

  std::size_t dim() const { return 2; }
  /// Core hull vertices in counter-clockwise order.
  const std::vector<Point<double>>& core() const { return core_; }
  double radius() const { return radius_; }
  std::size_t edge_count() const { return core_.size() < 2 ? 0 : (core_.size() == 2 ? 2 : core_.size()); }

  /// Edge k runs from core[k] to core[k+1].
  std::pair<Point<double>, Point<double>> edge(std::size_t k) const {
    return {core_[k % core_.size()], core_[(k + 1) % core_.size()]};
  }
  /// Outward unit normal of edge k.
  Point<double> edge_normal(std::size_t k) const {
    auto [p, q] = edge(k);
    Point<double> e = q - p;
    return normalized(Point<double>{e[1], -e[0]});
  }

  struct Nearest {
    double distance;
    Point<double> point;
    std::optional<std::size_t> edge;  // set when the nearest point is interior to an edge
  };

  /// Nearest point of the core (distance 0 inside the core).
  Nearest nearest_core(const Point<double>& x) const {
    require_same_dim(2, x.dim());
    if (core_.size() == 1) return {norm(x - core_[0]), core_[0], std::nullopt};
    if (core_.size() >= 3) {
      bool inside = true;
      for (std::size_t k = 0; k < core_.size() && inside; ++k) {
        auto [p, q] = edge(k);
        if (detail::cross(p, q, x) < 0.0) inside = false;
      }
      if (inside) return {0.0, x, std::nullopt};
    }
    Nearest best{std::numeric_limits<double>::infinity(), x, std::nullopt};
    for (std::size_t k = 0; k < edge_count(); ++k) {
      auto [p, q] = edge(k);
      Point<double> e = q - p;
      double t = std::clamp(dot(x - p, e) / dot(e, e), 0.0, 1.0);
      Point<double> c = p + t * e;
      double dist = norm(x - c);
      if (dist < best.distance) {
        std::optional<std::size_t> which;
        if (t > 0.0 && t < 1.0) which = k;
        best = {dist, c, which};
      }
    }
    if (core_.size() == 2 && best.edge) {
      // A segment core has two faces; pick the side x is on.
      auto [p, q] = edge(0);
      best.edge = detail::cross(p, q, x) < 0.0 ? 0 : 1;
    }
    return best;
  }

  double excess(const Point<double>& x) const { return nearest_core(x).distance - radius_; }

  /// sup over the core of <y, .>
  double core_support(const Point<double>& y) const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : core_) best = std::max(best, dot(v, y));
    return best;
  }

 private:
  std::vector<Point<double>> core_;
  double radius_;
};

inline Membership contains(const RoundedPolygon& r, const Point<double>& x, double tol = kDefaultTol) {
  check_tolerance<double>(tol);
  double e = r.excess(x);
  if (e < -tol) return Membership::inside;
  if (e <= tol) return Membership::boundary;
  return Membership::outside;
}

inline Membership contains_relative(const RoundedPolygon& r, const Point<double>& x, double tol = kDefaultTol) {
  return contains(r, x, tol);
}

inline Point<double> interior_point(const RoundedPolygon& r) {
  Point<double> c = Point<double>::zero(2);
  for (const auto& v : r.core()) c = c + v;
  return c / static_cast<double>(r.core().size());
}

/// Exact edge normal on flat pieces, radial direction on arcs.
inline SupportFunctional<double> support_functional(const RoundedPolygon& r, const Point<double>& x,
                                                    double tol = kDefaultTol) {
  if (contains(r, x, tol) != Membership::boundary) throw Error("support_functional: point is not on the boundary");
  auto near = r.nearest_core(x);
  Point<double> y = near.edge ? r.edge_normal(*near.edge) : normalized(x - near.point);
  return {y, r.core_support(y) + r.radius()};
}

inline Point<double> boundary_point_in_direction(const RoundedPolygon& r, const Point<double>& dir,
                                                 double tol = kDefaultTol) {
  require_same_dim(2, dir.dim());
  Point<double> u = normalized(dir);
  const double best = r.core_support(u);
  Point<double> sum = Point<double>::zero(2);
  int ties = 0;
  for (const auto& v : r.core())
    if (best - dot(v, u) <= tol) {
      sum = sum + v;
      ++ties;
    }
  return sum / static_cast<double>(ties) + r.radius() * u;
}

inline HitResult<double> segment_meets(const RoundedPolygon& r, const Segment<double>& s, SegmentMode mode,
                                       double tol = kDefaultTol) {
  require_same_dim(2, s.dim());
  check_tolerance<double>(tol);
  auto out = detail::golden_segment(s, [&](const Point<double>& x) { return r.excess(x); }, mode, tol);
  if (!out.hit) {
    // Closest pair between a convex body and a segment gives a separating line.
    double t = detail::golden_minimize([&](double u) { return r.excess(s.at(u)); }).t;
    Point<double> p = s.at(t);
    auto near = r.nearest_core(p);
    if (near.distance > 0.0) {
      Point<double> y = normalized(p - near.point);
      SupportFunctional<double> sep{y, r.core_support(y) + r.radius()};
      if (sep.value(s.a) > sep.offset && sep.value(s.b) > sep.offset) out.separator = sep;
    }
  }
  return out;
}

inline bool segment_hits(const RoundedPolygon& r, const Point<double>& a, const Point<double>& b, SegmentMode mode,
                         double tol = kDefaultTol) {
  return segment_meets(r, Segment<double>(a, b), mode, tol).hit;
}

}  // namespace hidden
