#pragma once

#include <vector>

#include "hidden/hpolytope.hpp"
#include "hidden/linalg.hpp"

namespace hidden {

/// x -> M x + s.
template <Scalar T>
struct AffineMap {
  Matrix<T> m;
  Point<T> s;

  AffineMap(Matrix<T> matrix, Point<T> shift) : m(std::move(matrix)), s(std::move(shift)) {
    if (s.dim() != m.rows()) throw DimensionMismatch(m.rows(), s.dim());
    check_dimension(m.cols());
  }
  static AffineMap identity(std::size_t d) { return AffineMap(Matrix<T>::identity(d), Point<T>::zero(d)); }

  std::size_t in_dim() const { return m.cols(); }
  std::size_t out_dim() const { return m.rows(); }
  Point<T> apply(const Point<T>& x) const {
    require_same_dim(in_dim(), x.dim());
    return m * x + s;
  }
  bool injective(double tol = default_tol<T>()) const { return rank(m, tol) == in_dim(); }
};

/// Ker(C) = {v : A v = 0} for C = {x : A x <= b}.
template <Scalar T>
LinearSubspace<T> lineality_space(const HPolytope<T>& p) {
  p.require_nonempty();
  if (p.rows() == 0) {
    std::vector<Point<T>> all;
    for (std::size_t i = 0; i < p.dim(); ++i) all.push_back(Point<T>::unit(p.dim(), i));
    return LinearSubspace<T>(p.dim(), std::move(all));
  }
  return LinearSubspace<T>(p.dim(), null_space(p.a()));
}

template <Scalar T>
struct Quotient {
  HPolytope<T> body;  // D, with C = Q^{-1}(D)
  AffineMap<T> map;   // Q
  LinearSubspace<T> kernel;
};

/**
 * C modulo its lineality space. Q(x) = R x where the rows of R span the row
 * space of A (the orthogonal complement of Ker). In floating point the rows
 * are orthonormal, so Q is the orthogonal projection in an orthonormal basis
 * of the complement; in exact mode R is the nonzero part of rref(A), which
 * keeps every entry rational. Either way A = C R for some C and
 * D = {u : C u <= b}.
 */
template <Scalar T>
Quotient<T> quotient_body(const HPolytope<T>& p) {
  p.require_nonempty();
  auto kernel = lineality_space(p);
  const std::size_t d = p.dim(), m = p.rows();
  if (kernel.dim() == d) throw Error("body is the whole space; its quotient is trivial");
  if constexpr (is_exact_v<T>) {
    auto e = rref(p.a(), 0.0);
    const std::size_t k = e.rank();
    Matrix<T> r(k, d), c(m, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < d; ++j) r(i, j) = e.reduced(i, j);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) c(i, j) = p.a()(i, e.pivots[j]);
    return {HPolytope<T>(std::move(c), p.b()), AffineMap<T>(std::move(r), Point<T>::zero(k)), std::move(kernel)};
  } else {
    std::vector<Point<double>> rows;
    for (std::size_t i = 0; i < m; ++i) rows.push_back(p.a().row_point(i));
    auto basis = orthonormal_basis(rows);
    const std::size_t k = basis.size();
    Matrix<double> r = Matrix<double>::from_points(basis, d);
    Matrix<double> c = p.a() * r.transpose();
    return {HPolytope<double>(std::move(c), p.b()), AffineMap<double>(std::move(r), Point<double>::zero(k)),
            std::move(kernel)};
  }
}

/**
 * T^{-1}(D) = {x : (A M) x <= b - A s}. Rows that the map flattens to zero
 * are either always satisfied (dropped) or never satisfied, in which case the
 * preimage is empty and is written as the contradictory pair x_1 <= -1, -x_1 <= -1.
 */
template <Scalar T>
HPolytope<T> pullback_polytope(const HPolytope<T>& dst, const AffineMap<T>& map) {
  require_same_dim(dst.dim(), map.out_dim());
  const std::size_t n = map.in_dim();
  const Matrix<T> am = dst.a() * map.m;
  const Point<T> as = dst.a() * map.s;
  std::vector<std::vector<T>> rows;
  std::vector<T> rhs;
  bool infeasible = false;
  for (std::size_t i = 0; i < dst.rows(); ++i) {
    std::vector<T> row(am.row(i).begin(), am.row(i).end());
    T r = dst.b()[i] - as[i];
    bool zero = true;
    for (const T& v : row)
      if (sign(v, 0.0) != 0) zero = false;
    if (zero) {
      if (sign(r, 0.0) < 0) infeasible = true;
      continue;
    }
    rows.push_back(std::move(row));
    rhs.push_back(r);
  }
  if (infeasible) {
    std::vector<T> e(n, T(0));
    e[0] = T(1);
    rows.push_back(e);
    rhs.push_back(T(-1));
    e[0] = T(-1);
    rows.push_back(e);
    rhs.push_back(T(-1));
  }
  Matrix<T> a(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  return HPolytope<T>(std::move(a), std::move(rhs));
}

/// {x in ambient : <normal, x> <= threshold}; normal lies in the direction space of ambient.
template <Scalar T>
struct HalfSpace {
  Point<T> normal;
  T threshold;
  std::size_t source_row = 0;
};

template <Scalar T>
struct PolyhedricDecomposition {
  AffineSubspace<T> ambient;
  std::vector<HalfSpace<T>> halves;

  bool contains(const Point<T>& x, double tol = default_tol<T>()) const {
    if (!ambient.contains(x, tol)) return false;
    for (const auto& h : halves)
      if (sign(T(dot(h.normal, x) - h.threshold), tol * std::max(1.0, norm(h.normal))) > 0) return false;
    return true;
  }
};

/**
 * aff(C) from the implicit equalities, then the remaining rows with the
 * redundant ones removed one at a time (a row is dropped when maximizing it
 * over the other surviving rows and the equalities cannot exceed its offset).
 * Each survivor is restricted to aff(C) by projecting its normal onto the
 * direction space.
 */
template <Scalar T>
PolyhedricDecomposition<T> polyhedric_decompose(const HPolytope<T>& p) {
  p.require_nonempty();
  const std::size_t d = p.dim(), m = p.rows();
  std::vector<Point<T>> implicit_rows;
  for (std::size_t i = 0; i < m; ++i)
    if (p.is_implicit_equality(i)) implicit_rows.push_back(p.a().row_point(i));
  std::vector<Point<T>> directions;
  if (implicit_rows.empty()) {
    for (std::size_t j = 0; j < d; ++j) directions.push_back(Point<T>::unit(d, j));
  } else {
    directions = null_space(Matrix<T>::from_points(implicit_rows, d));
  }
  AffineSubspace<T> aff(interior_point(p), directions);
  const LinearSubspace<T> normal_space(d, null_space(Matrix<T>::from_points(directions.empty() ? std::vector<Point<T>>{Point<T>::zero(d)} : directions, d)));

  std::vector<bool> alive(m, false);
  for (std::size_t i = 0; i < m; ++i) alive[i] = !p.is_implicit_equality(i);
  for (std::size_t i = 0; i < m; ++i) {
    if (!alive[i]) continue;
    LpBuilder<T> lp(d);
    for (std::size_t k = 0; k < m; ++k) {
      if (k == i) continue;
      std::vector<T> row(p.a().row(k).begin(), p.a().row(k).end());
      if (p.is_implicit_equality(k)) lp.eq(row, p.b()[k]);
      else if (alive[k]) lp.leq(std::move(row), p.b()[k]);
    }
    auto r = lp.maximize(std::vector<T>(p.a().row(i).begin(), p.a().row(i).end()));
    if (r.optimal() && sign(T(r.value - p.b()[i]), kPivotTol * p.row_norm(i)) <= 0) alive[i] = false;
  }

  std::vector<HalfSpace<T>> halves;
  for (std::size_t i = 0; i < m; ++i) {
    if (!alive[i]) continue;
    const Point<T> row = p.a().row_point(i);
    // Component of the row inside the direction space of aff(C).
    const Point<T> normal = project_onto_complement(row, normal_space);
    T threshold = p.b()[i] - dot(row, aff.base()) + dot(normal, aff.base());
    halves.push_back({normal, threshold, i});
  }
  return {std::move(aff), std::move(halves)};
}

}  // namespace hidden
