#pragma once

#include <cmath>
#include <vector>

#include "hidden/linalg.hpp"
#include "hidden/lp.hpp"
#include "hidden/types.hpp"

namespace hidden {

/**
 * The polyhedral set {x : A x <= b}.
 *
 * Every row of A is nonzero. A representation with zero rows stands for the
 * whole space (it arises from pullbacks under maps that flatten every row).
 * Construction runs the facet analysis once: emptiness and the set of
 * implicit equalities (rows tight on all of the set), which together fix the
 * affine hull and the relative interior used by every oracle below.
 */
template <Scalar T>
class HPolytope {
 public:
  HPolytope(Matrix<T> a, std::vector<T> b) : a_(std::move(a)), b_(std::move(b)) {
    check_dimension(a_.cols());
    if (b_.size() != a_.rows()) throw DimensionMismatch(a_.rows(), b_.size());
    weights_.resize(a_.rows());
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      T n2(0);
      for (const T& v : a_.row(i)) {
        if constexpr (!is_exact_v<T>) {
          if (!std::isfinite(v)) throw Error("constraint matrix entries must be finite");
        }
        n2 += v * v;
      }
      if (n2 == T(0)) throw Error("constraint row " + std::to_string(i) + " is zero");
      if constexpr (!is_exact_v<T>) {
        if (!std::isfinite(b_[i])) throw Error("constraint offsets must be finite");
      }
      weights_[i] = std::sqrt(to_double(n2));
    }
    analyze();
  }

  /// [-h, h]^d as 2d inequalities.
  static HPolytope box(std::size_t d, const T& h) {
    Matrix<T> a(2 * d, d);
    std::vector<T> b(2 * d, h);
    for (std::size_t i = 0; i < d; ++i) {
      a(2 * i, i) = T(1);
      a(2 * i + 1, i) = T(-1);
    }
    return HPolytope(std::move(a), std::move(b));
  }

  std::size_t dim() const { return a_.cols(); }
  std::size_t rows() const { return a_.rows(); }
  const Matrix<T>& a() const { return a_; }
  const std::vector<T>& b() const { return b_; }
  /// Euclidean norm of row i.
  double row_norm(std::size_t i) const { return weights_[i]; }

  bool empty() const { return empty_; }
  bool is_implicit_equality(std::size_t i) const { return implicit_[i]; }
  const std::vector<bool>& implicit_equalities() const { return implicit_; }
  bool full_dimensional() const {
    if (empty_) return false;
    for (bool e : implicit_)
      if (e) return false;
    return true;
  }

  /// b_i - <A_i, x>
  T slack(std::size_t i, const Point<T>& x) const { return b_[i] - row_dot(a_, i, x); }

  void require_nonempty() const {
    if (empty_) throw Error("empty body");
  }

 private:
  T weight(std::size_t i) const {
    if constexpr (is_exact_v<T>) return Rational(weights_[i]);
    else return weights_[i];
  }

  void analyze() {
    const std::size_t m = rows(), d = dim();
    implicit_.assign(m, false);
    if (m == 0) return;
    // max t  s.t.  A_i x + w_i t <= b_i, t <= 1
    LpBuilder<T> lp(d + 1);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<T> row(a_.row(i).begin(), a_.row(i).end());
      row.push_back(weight(i));
      lp.leq(std::move(row), b_[i]);
    }
    std::vector<T> cap(d + 1, T(0));
    cap[d] = T(1);
    lp.leq(cap, T(1));
    auto r = lp.maximize(cap);
    if (!r.optimal()) {
      empty_ = true;
      return;
    }
    if (sign(r.value, kPivotTol) > 0) return;

    std::vector<bool> decided(m, false);
    auto mark_slack_rows = [&](const std::vector<T>& x) {
      Point<T> p(std::vector<T>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(d)));
      for (std::size_t k = 0; k < m; ++k)
        if (sign(slack(k, p), kPivotTol * weights_[k]) > 0) decided[k] = true;
    };
    mark_slack_rows(r.x);
    Matrix<T> a = a_;
    for (std::size_t i = 0; i < m; ++i) {
      if (decided[i]) continue;
      std::vector<T> c(d);
      for (std::size_t j = 0; j < d; ++j) c[j] = -a_(i, j);
      auto s = maximize(a, b_, c);
      if (s.status == LpStatus::unbounded) {
        decided[i] = true;
        continue;
      }
      if (s.status == LpStatus::infeasible) {
        empty_ = true;
        return;
      }
      mark_slack_rows(s.x);
      if (!decided[i]) implicit_[i] = true;
      decided[i] = true;
    }
  }

  Matrix<T> a_;
  std::vector<T> b_;
  std::vector<double> weights_;
  std::vector<bool> implicit_;
  bool empty_ = false;
};

namespace detail {

// Tolerance band on row i, scaled by the row norm so it measures distance.
template <Scalar T>
int slack_sign(const HPolytope<T>& p, std::size_t i, const T& slack, double tol) {
  if constexpr (is_exact_v<T>) return slack.sign();
  else return sign(slack, tol * p.row_norm(i));
}

}  // namespace detail

/// Ambient classification: inside iff every inequality is strict.
template <Scalar T>
Membership contains(const HPolytope<T>& p, const Point<T>& x, double tol = default_tol<T>()) {
  require_same_dim(p.dim(), x.dim());
  check_tolerance<T>(tol);
  bool tight = false;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    int s = detail::slack_sign(p, i, p.slack(i, x), tol);
    if (s < 0) return Membership::outside;
    if (s == 0) tight = true;
  }
  return tight ? Membership::boundary : Membership::inside;
}

/// Classification relative to the affine hull: implicit equalities may be tight.
template <Scalar T>
Membership contains_relative(const HPolytope<T>& p, const Point<T>& x, double tol = default_tol<T>()) {
  require_same_dim(p.dim(), x.dim());
  check_tolerance<T>(tol);
  bool tight = false;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    int s = detail::slack_sign(p, i, p.slack(i, x), tol);
    if (s < 0) return Membership::outside;
    if (s == 0 && !p.is_implicit_equality(i)) tight = true;
  }
  return tight ? Membership::boundary : Membership::inside;
}

/// Relative-interior point maximizing the smallest normalized slack of the
/// non-implicit rows (the Chebyshev center for full-dimensional bodies).
template <Scalar T>
Point<T> interior_point(const HPolytope<T>& p) {
  p.require_nonempty();
  const std::size_t d = p.dim();
  LpBuilder<T> lp(d + 1);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    std::vector<T> row(p.a().row(i).begin(), p.a().row(i).end());
    if (p.is_implicit_equality(i)) row.push_back(T(0));
    else if constexpr (is_exact_v<T>) row.push_back(Rational(p.row_norm(i)));
    else row.push_back(p.row_norm(i));
    lp.leq(std::move(row), p.b()[i]);
  }
  std::vector<T> c(d + 1, T(0));
  c[d] = T(1);
  auto r = lp.maximize(c);
  if (r.status == LpStatus::unbounded) {
    lp.leq(c, T(1));
    r = lp.maximize(c);
  }
  if (!r.optimal()) throw Error("empty body");
  return Point<T>(std::vector<T>(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(d)));
}

/**
 * A supporting functional at a boundary point x.
 *
 * At a point in the relative interior of a facet this is the facet normal.
 * At lower-dimensional faces the choice is not unique; the normalized sum of
 * the tight facet normals is returned.
 */
template <Scalar T>
SupportFunctional<double> support_functional(const HPolytope<T>& p, const Point<T>& x,
                                             double tol = default_tol<T>()) {
  if (contains(p, x, tol) != Membership::boundary) throw Error("support_functional: point is not on the boundary");
  const std::size_t d = p.dim();
  std::vector<double> sum(d, 0.0);
  std::optional<std::size_t> first_tight, first_implicit;
  bool any = false;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (detail::slack_sign(p, i, p.slack(i, x), tol) != 0) continue;
    if (p.is_implicit_equality(i)) {
      if (!first_implicit) first_implicit = i;
      continue;
    }
    if (!first_tight) first_tight = i;
    any = true;
    for (std::size_t j = 0; j < d; ++j) sum[j] += to_double(p.a()(i, j)) / p.row_norm(i);
  }
  Point<double> y(std::move(sum));
  if (!any || norm(y) < 1e-12) {
    std::size_t row = any ? *first_tight : *first_implicit;
    y = point_cast<double>(p.a().row_point(row));
  }
  y = normalized(y);
  return {y, dot(y, point_cast<double>(x))};
}

/// Point of the face maximizing <dir, .>, taken at that face's relative-interior center.
template <Scalar T>
Point<T> boundary_point_in_direction(const HPolytope<T>& p, const Point<T>& dir) {
  require_same_dim(p.dim(), dir.dim());
  p.require_nonempty();
  auto r = maximize(p.a(), p.b(), std::vector<T>(dir.coords().begin(), dir.coords().end()));
  if (r.status == LpStatus::unbounded) throw Error("unbounded direction");
  if (!r.optimal()) throw Error("empty body");
  Matrix<T> a(p.rows() + 1, p.dim());
  std::vector<T> b = p.b();
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) a(i, j) = p.a()(i, j);
  for (std::size_t j = 0; j < p.dim(); ++j) a(p.rows(), j) = -dir[j];
  b.push_back(-r.value);
  HPolytope<T> face(std::move(a), std::move(b));
  if (face.empty()) return Point<T>(r.x);
  return interior_point(face);
}

namespace detail {

template <Scalar T>
struct Clip {
  bool hit = false;
  T lo{}, hi{};
};

// Parametric clipping of [a, b] against {A x <= b}.
template <Scalar T>
Clip<T> clip(const HPolytope<T>& p, const Point<T>& a, const Point<T>& b, SegmentMode mode, double tol) {
  T lo(0), hi(1);
  bool lo_strict = false, hi_strict = false;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    const bool strict = mode == SegmentMode::open_interior && !p.is_implicit_equality(i);
    T pa = row_dot(p.a(), i, a);
    T q = row_dot(p.a(), i, b) - pa;
    T rhs = p.b()[i];
    if constexpr (!is_exact_v<T>) rhs += (strict ? -tol : tol) * p.row_norm(i);
    T room = rhs - pa;
    if (q == T(0)) {
      if (room < T(0) || (strict && is_exact_v<T> && room == T(0))) return {};
      continue;
    }
    T v = room / q;
    if (q > T(0)) {
      if (v < hi) {
        hi = v;
        hi_strict = strict;
      } else if (v == hi) {
        hi_strict = hi_strict || strict;
      }
    } else {
      if (v > lo) {
        lo = v;
        lo_strict = strict;
      } else if (v == lo) {
        lo_strict = lo_strict || strict;
      }
    }
    if (hi < lo) return {};
  }
  bool ok = lo < hi || (lo == hi && (!is_exact_v<T> || (!lo_strict && !hi_strict)));
  if (!ok) return {};
  return {true, lo, hi};
}

// Strict separator from a Farkas combination of the rows, if one exists.
template <Scalar T>
std::optional<SupportFunctional<T>> separate(const HPolytope<T>& p, const Point<T>& a, const Point<T>& b,
                                             double tol) {
  if (p.empty() || p.rows() == 0) return std::nullopt;
  const std::size_t m = p.rows();
  // variables: lambda_0..lambda_{m-1}, mu
  LpBuilder<T> lp(m + 1);
  std::vector<T> ones(m + 1, T(1));
  ones[m] = T(0);
  lp.eq(ones, T(1));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<T> row(m + 1, T(0));
    row[i] = T(-1);
    lp.leq(std::move(row), T(0));
  }
  for (const Point<T>* end : {&a, &b}) {
    std::vector<T> row(m + 1);
    for (std::size_t i = 0; i < m; ++i) row[i] = p.b()[i] - row_dot(p.a(), i, *end);
    row[m] = T(1);
    lp.leq(std::move(row), T(0));
  }
  std::vector<T> c(m + 1, T(0));
  c[m] = T(1);
  lp.leq(c, T(1));
  auto r = lp.maximize(c);
  if (!r.optimal() || sign(r.value, 0.0) <= 0) return std::nullopt;
  std::vector<T> normal(p.dim(), T(0));
  T offset(0);
  for (std::size_t i = 0; i < m; ++i) {
    if (r.x[i] == T(0)) continue;
    for (std::size_t j = 0; j < p.dim(); ++j) normal[j] += r.x[i] * p.a()(i, j);
    offset += r.x[i] * p.b()[i];
  }
  SupportFunctional<T> sep{Point<T>(std::move(normal)), offset};
  if constexpr (!is_exact_v<T>) {
    double len = norm(sep.normal);
    if (!(len > 0.0)) return std::nullopt;
    sep = {sep.normal / len, sep.offset / len};
    if (!(sep.value(a) - sep.offset > tol && sep.value(b) - sep.offset > tol)) return std::nullopt;
  }
  return sep;
}

}  // namespace detail

/// Boolean form of segment_meets, without witness or separator.
template <Scalar T>
bool segment_hits(const HPolytope<T>& p, const Point<T>& a, const Point<T>& b, SegmentMode mode,
                  double tol = default_tol<T>()) {
  if (p.empty()) return false;
  return detail::clip(p, a, b, mode, tol).hit;
}

/// Exact parametric clipping: [0,1] intersected with {t : A(a + t(b-a)) <= b}.
template <Scalar T>
HitResult<T> segment_meets(const HPolytope<T>& p, const Segment<T>& s, SegmentMode mode,
                           double tol = default_tol<T>()) {
  require_same_dim(p.dim(), s.dim());
  check_tolerance<T>(tol);
  HitResult<T> out;
  if (p.empty()) return out;
  auto c = detail::clip(p, s.a, s.b, mode, tol);
  if (c.hit) {
    out.hit = true;
    out.t_lo = c.lo;
    out.t_hi = c.hi;
    out.witness_t = (c.lo + c.hi) / T(2);
    out.witness = s.at(out.witness_t);
  } else {
    out.separator = detail::separate(p, s.a, s.b, tol);
  }
  return out;
}

}  // namespace hidden
