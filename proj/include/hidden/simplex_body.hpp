#pragma once

#include "hidden/hpolytope.hpp"

namespace hidden {

/// The standard simplex {x in [0,1]^d : sum x_i = 1}, a (d-1)-dimensional body in R^d.
class SimplexBody {
 public:
  explicit SimplexBody(std::size_t d) : d_(d) { check_dimension(d); }

  std::size_t dim() const { return d_; }

  /// x_i >= 0 for every i, then sum x <= 1 and sum x >= 1.
  template <Scalar T>
  HPolytope<T> as_hpolytope() const {
    Matrix<T> a(d_ + 2, d_);
    std::vector<T> b(d_ + 2, T(0));
    for (std::size_t i = 0; i < d_; ++i) {
      a(i, i) = T(-1);
      a(d_, i) = T(1);
      a(d_ + 1, i) = T(-1);
    }
    b[d_] = T(1);
    b[d_ + 1] = T(-1);
    return HPolytope<T>(std::move(a), std::move(b));
  }

 private:
  std::size_t d_;
};

namespace detail {

template <Scalar T>
T coordinate_sum(const Point<T>& x) {
  T s(0);
  for (const T& v : x.coords()) s += v;
  return s;
}

// Classification relative to aff(simplex) = {sum x = 1}.
template <Scalar T>
Membership simplex_relative(const SimplexBody& s, const Point<T>& x, double tol) {
  require_same_dim(s.dim(), x.dim());
  check_tolerance<T>(tol);
  const double band = tol * std::sqrt(static_cast<double>(s.dim()));
  if (sign(T(coordinate_sum(x) - T(1)), band) != 0) return Membership::outside;
  bool tight = false;
  for (const T& v : x.coords()) {
    int sg = sign(v, tol);
    if (sg < 0) return Membership::outside;
    if (sg == 0) tight = true;
  }
  // For d = 1 the body is the single point {1}; it is its own relative interior.
  return tight && s.dim() > 1 ? Membership::boundary : Membership::inside;
}

}  // namespace detail

/// Ambient classification. The simplex has empty interior in R^d, so every
/// point of it is a boundary point.
template <Scalar T>
Membership contains(const SimplexBody& s, const Point<T>& x, double tol = default_tol<T>()) {
  auto m = detail::simplex_relative(s, x, tol);
  return m == Membership::outside ? m : Membership::boundary;
}

template <Scalar T>
Membership contains_relative(const SimplexBody& s, const Point<T>& x, double tol = default_tol<T>()) {
  return detail::simplex_relative(s, x, tol);
}

/// Barycenter.
template <Scalar T = double>
Point<T> interior_point(const SimplexBody& s) {
  return Point<T>(std::vector<T>(s.dim(), T(1) / T(static_cast<long>(s.dim()))));
}

template <Scalar T>
SupportFunctional<double> support_functional(const SimplexBody& s, const Point<T>& x,
                                             double tol = default_tol<T>()) {
  return support_functional(s.template as_hpolytope<T>(), x, tol);
}

/// Vertex maximizing <dir, .>; ties resolve to the centroid of the tied vertices.
template <Scalar T>
Point<T> boundary_point_in_direction(const SimplexBody& s, const Point<T>& dir, double tol = default_tol<T>()) {
  require_same_dim(s.dim(), dir.dim());
  T best = *std::max_element(dir.coords().begin(), dir.coords().end());
  std::vector<T> out(s.dim(), T(0));
  long ties = 0;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (sign(T(best - dir[i]), tol) == 0) {
      out[i] = T(1);
      ++ties;
    }
  for (auto& v : out) v /= T(ties);
  return Point<T>(std::move(out));
}

namespace detail {

template <Scalar T>
Clip<T> clip(const SimplexBody& s, const Point<T>& a, const Point<T>& b, SegmentMode mode, double tol) {
  require_same_dim(s.dim(), a.dim());
  const bool strict = mode == SegmentMode::open_interior && s.dim() > 1;
  T sa = coordinate_sum(a);
  T sq = coordinate_sum(b) - sa;
  T lo(0), hi(1);
  if (sq == T(0)) {
    if (sign(T(sa - T(1)), tol * std::sqrt(static_cast<double>(s.dim()))) != 0) return {};
  } else {
    T t = (T(1) - sa) / sq;
    if constexpr (is_exact_v<T>) {
      if (t < 0 || t > 1) return {};
      lo = hi = t;
    } else {
      // Width of the slab |sum - 1| <= tol*sqrt(d) along the segment.
      T w = std::abs(tol * std::sqrt(static_cast<double>(s.dim())) / sq);
      lo = std::max(T(0), t - w);
      hi = std::min(T(1), t + w);
      if (lo > hi) return {};
    }
  }
  bool lo_strict = false, hi_strict = false;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    // a_i + t q_i >= 0 (> 0 in open mode)
    T q = b[i] - a[i];
    T room = a[i];
    if constexpr (!is_exact_v<T>) room += strict ? -tol : tol;
    if (q == T(0)) {
      if (room < T(0) || (strict && is_exact_v<T> && room == T(0))) return {};
      continue;
    }
    T v = -room / q;
    if (q > T(0)) {
      if (v > lo) {
        lo = v;
        lo_strict = strict;
      } else if (v == lo) {
        lo_strict = lo_strict || strict;
      }
    } else {
      if (v < hi) {
        hi = v;
        hi_strict = strict;
      } else if (v == hi) {
        hi_strict = hi_strict || strict;
      }
    }
    if (hi < lo) return {};
  }
  bool ok = lo < hi || (lo == hi && (!is_exact_v<T> || (!lo_strict && !hi_strict)));
  if (!ok) return {};
  return {true, lo, hi};
}

}  // namespace detail

template <Scalar T>
bool segment_hits(const SimplexBody& s, const Point<T>& a, const Point<T>& b, SegmentMode mode,
                  double tol = default_tol<T>()) {
  return detail::clip(s, a, b, mode, tol).hit;
}

template <Scalar T>
HitResult<T> segment_meets(const SimplexBody& s, const Segment<T>& seg, SegmentMode mode,
                           double tol = default_tol<T>()) {
  require_same_dim(s.dim(), seg.dim());
  check_tolerance<T>(tol);
  HitResult<T> out;
  auto c = detail::clip(s, seg.a, seg.b, mode, tol);
  if (c.hit) {
    out.hit = true;
    out.t_lo = c.lo;
    out.t_hi = c.hi;
    out.witness_t = (c.lo + c.hi) / T(2);
    out.witness = seg.at(out.witness_t);
  } else {
    out.separator = detail::separate(s.template as_hpolytope<T>(), seg.a, seg.b, tol);
  }
  return out;
}

}  // namespace hidden
