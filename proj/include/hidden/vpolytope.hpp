#pragma once

#include <vector>

#include "hidden/linalg.hpp"
#include "hidden/lp.hpp"
#include "hidden/types.hpp"

namespace hidden {

/// conv(vertices). Membership and segment queries are LPs over barycentric weights;
/// no facet enumeration is ever performed.
template <Scalar T>
class VPolytope {
 public:
  explicit VPolytope(std::vector<Point<T>> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw Error("vpolytope needs at least one vertex");
    for (const auto& v : vertices_) require_same_dim(vertices_.front().dim(), v.dim());
    aff_dim_ = affine_hull(vertices_).dim();
  }

  std::size_t dim() const { return vertices_.front().dim(); }
  const std::vector<Point<T>>& vertices() const { return vertices_; }
  std::size_t affine_dim() const { return aff_dim_; }
  bool full_dimensional() const { return aff_dim_ == dim(); }

  Point<T> centroid() const {
    std::vector<T> c(dim(), T(0));
    for (const auto& v : vertices_)
      for (std::size_t j = 0; j < dim(); ++j) c[j] += v[j];
    for (auto& x : c) x /= T(static_cast<long>(vertices_.size()));
    return Point<T>(std::move(c));
  }

 private:
  std::vector<Point<T>> vertices_;
  std::size_t aff_dim_ = 0;
};

namespace detail {

// Adds sum(lambda) = 1, lambda >= 0 and V lambda - t (b - a) = a (+/- slack band).
// Variable layout: lambda_0..lambda_{n-1}, then `extra` further variables where
// extra[0] (if present) is t.
template <Scalar T>
LpBuilder<T> barycentric_system(const VPolytope<T>& v, const Point<T>& a, const Point<T>* dir, std::size_t extra,
                                double band) {
  const std::size_t n = v.vertices().size(), d = v.dim();
  LpBuilder<T> lp(n + extra);
  std::vector<T> ones(n + extra, T(0));
  for (std::size_t i = 0; i < n; ++i) ones[i] = T(1);
  lp.eq(ones, T(1));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<T> row(n + extra, T(0));
    row[i] = T(-1);
    lp.leq(std::move(row), T(0));
  }
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<T> row(n + extra, T(0));
    for (std::size_t i = 0; i < n; ++i) row[i] = v.vertices()[i][j];
    if (dir) row[n] = -(*dir)[j];
    if constexpr (is_exact_v<T>) {
      (void)band;
      lp.eq(row, a[j]);
    } else {
      lp.leq(row, a[j] + band);
      lp.geq(row, a[j] - band);
    }
  }
  return lp;
}

// Largest s with lambda_i >= s for every i; nullopt when x is not in conv(V).
template <Scalar T>
std::optional<T> relative_depth(const VPolytope<T>& v, const Point<T>& x, double band) {
  const std::size_t n = v.vertices().size();
  auto lp = barycentric_system(v, x, static_cast<const Point<T>*>(nullptr), 1, band);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<T> row(n + 1, T(0));
    row[i] = T(-1);
    row[n] = T(1);
    lp.leq(std::move(row), T(0));
  }
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  lp.leq(c, T(1));
  auto r = lp.maximize(c);
  if (!r.optimal()) return std::nullopt;
  return r.value;
}

}  // namespace detail

template <Scalar T>
Membership contains_relative(const VPolytope<T>& v, const Point<T>& x, double tol = default_tol<T>()) {
  require_same_dim(v.dim(), x.dim());
  check_tolerance<T>(tol);
  if (auto depth = detail::relative_depth(v, x, 0.0)) return sign(*depth, tol) > 0 ? Membership::inside : Membership::boundary;
  if constexpr (!is_exact_v<T>) {
    if (detail::relative_depth(v, x, tol)) return Membership::boundary;
  }
  return Membership::outside;
}

template <Scalar T>
Membership contains(const VPolytope<T>& v, const Point<T>& x, double tol = default_tol<T>()) {
  auto m = contains_relative(v, x, tol);
  if (m == Membership::inside && !v.full_dimensional()) return Membership::boundary;
  return m;
}

/// Vertex centroid: every barycentric weight is positive, so it is relatively interior.
template <Scalar T>
Point<T> interior_point(const VPolytope<T>& v) {
  return v.centroid();
}

template <Scalar T>
SupportFunctional<double> support_functional(const VPolytope<T>& v, const Point<T>& x,
                                             double tol = default_tol<T>()) {
  if (contains(v, x, tol) != Membership::boundary) throw Error("support_functional: point is not on the boundary");
  const std::size_t d = v.dim();
  const Point<T> g = v.centroid();
  // y with <y, v_i - x> <= 0 for all i and <y, x - g> = 1
  LpBuilder<T> lp(d);
  for (const auto& vert : v.vertices()) {
    Point<T> diff = vert - x;
    lp.leq(diff.vec(), T(0));
  }
  lp.eq((x - g).vec(), T(1));
  auto r = lp.maximize(std::vector<T>(d, T(0)));
  Point<double> y = Point<double>::zero(d);
  if (r.optimal()) {
    y = point_cast<double>(Point<T>(r.x));
  } else {
    // x is relatively interior in a lower-dimensional hull: any normal of the hull works.
    std::vector<Point<T>> dirs;
    for (const auto& vert : v.vertices()) dirs.push_back(vert - v.vertices().front());
    auto normals = null_space(Matrix<T>::from_points(dirs, d));
    if (normals.empty()) throw Error("support_functional: point is not on the boundary");
    y = point_cast<double>(normals.front());
  }
  y = normalized(y);
  return {y, dot(y, point_cast<double>(x))};
}

template <Scalar T>
Point<T> boundary_point_in_direction(const VPolytope<T>& v, const Point<T>& dir, double tol = default_tol<T>()) {
  require_same_dim(v.dim(), dir.dim());
  T best = dot(dir, v.vertices().front());
  for (const auto& vert : v.vertices()) best = std::max(best, dot(dir, vert));
  std::vector<T> sum(v.dim(), T(0));
  long ties = 0;
  for (const auto& vert : v.vertices())
    if (sign(T(best - dot(dir, vert)), tol) == 0) {
      for (std::size_t j = 0; j < v.dim(); ++j) sum[j] += vert[j];
      ++ties;
    }
  for (auto& x : sum) x /= T(ties);
  return Point<T>(std::move(sum));
}

/// LP clipping: min and max t with a + t(b - a) in conv(V). Open-interior mode
/// maximizes the smallest barycentric weight along the segment instead.
template <Scalar T>
HitResult<T> segment_meets(const VPolytope<T>& v, const Segment<T>& s, SegmentMode mode,
                           double tol = default_tol<T>()) {
  require_same_dim(v.dim(), s.dim());
  check_tolerance<T>(tol);
  const std::size_t n = v.vertices().size();
  const Point<T> dir = s.b - s.a;
  HitResult<T> out;
  auto bounded_t = [&](std::size_t extra, double band) {
    auto lp = detail::barycentric_system(v, s.a, &dir, extra, band);
    std::vector<T> t_row(n + extra, T(0));
    t_row[n] = T(1);
    lp.leq(t_row, T(1));
    lp.geq(t_row, T(0));
    return lp;
  };
  auto lp = bounded_t(1, tol);
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  auto hi = lp.maximize(c);
  if (!hi.optimal()) return out;
  c[n] = T(-1);
  auto lo = lp.maximize(c);
  if (!lo.optimal()) return out;
  out.t_lo = -lo.value;
  out.t_hi = hi.value;
  out.witness_t = (out.t_lo + out.t_hi) / T(2);
  if (mode == SegmentMode::open_interior) {
    auto deep = bounded_t(2, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<T> row(n + 2, T(0));
      row[i] = T(-1);
      row[n + 1] = T(1);
      deep.leq(std::move(row), T(0));
    }
    std::vector<T> cs(n + 2, T(0));
    cs[n + 1] = T(1);
    deep.leq(cs, T(1));
    auto r = deep.maximize(cs);
    if (!r.optimal() || sign(r.value, tol) <= 0) return out;
    out.witness_t = r.x[n];
  }
  out.hit = true;
  out.witness = s.at(out.witness_t);
  return out;
}

template <Scalar T>
bool segment_hits(const VPolytope<T>& v, const Point<T>& a, const Point<T>& b, SegmentMode mode,
                  double tol = default_tol<T>()) {
  return segment_meets(v, Segment<T>(a, b), mode, tol).hit;
}

}  // namespace hidden
