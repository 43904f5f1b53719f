#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hidden/point.hpp"

namespace hidden {

/// Reduced row echelon form plus the pivot column of each nonzero row.
template <Scalar T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/**
 * Gauss-Jordan elimination. Float mode picks the largest pivot in each column
 * and treats entries with |x| <= tol as zero; exact mode uses true zero.
 */
template <Scalar T>
Echelon<T> rref(Matrix<T> m, double tol = kPivotTol) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = row;
    if constexpr (is_exact_v<T>) {
      while (best < m.rows() && m(best, col) == 0) ++best;
      if (best == m.rows()) continue;
    } else {
      for (std::size_t i = row + 1; i < m.rows(); ++i)
        if (std::abs(m(i, col)) > std::abs(m(best, col))) best = i;
      if (std::abs(m(best, col)) <= tol) {
        for (std::size_t i = row; i < m.rows(); ++i) m(i, col) = 0;
        continue;
      }
    }
    if (best != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(best, j));
    T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == T(0)) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <Scalar T>
std::size_t rank(const Matrix<T>& m, double tol = kPivotTol) {
  return rref(m, tol).rank();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <Scalar T>
std::vector<Point<T>> null_space(const Matrix<T>& m, double tol = kPivotTol) {
  auto e = rref(m, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Point<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.emplace_back(std::move(v));
  }
  return basis;
}

/// Solves the square system a x = b; nullopt when a is singular.
template <Scalar T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b, double tol = kPivotTol) {
  if (a.rows() != a.cols() || b.size() != a.rows()) throw Error("solve: expected a square system");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = rref(std::move(aug), tol);
  if (e.rank() != a.rows() || e.pivots.back() >= a.cols()) return std::nullopt;
  std::vector<T> x(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) x[i] = e.reduced(i, a.cols());
  return x;
}

/// Rows of an orthonormal basis for the span of the given vectors (modified Gram-Schmidt).
inline std::vector<Point<double>> orthonormal_basis(const std::vector<Point<double>>& vectors,
                                                    double tol = kPivotTol) {
  std::vector<Point<double>> basis;
  for (const auto& v : vectors) {
    Point<double> w = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) w = w - dot(w, q) * q;
    double n = norm(w);
    if (n > tol * std::max(1.0, norm(v))) basis.push_back(w / n);
  }
  return basis;
}

/**
 * A linear subspace of R^d given by a linearly independent basis.
 * The zero subspace has an empty basis and remembers its ambient dimension.
 */
template <Scalar T>
class LinearSubspace {
 public:
  LinearSubspace(std::size_t ambient_dim, std::vector<Point<T>> basis, double tol = kPivotTol)
      : ambient_(ambient_dim), basis_(std::move(basis)) {
    check_dimension(ambient_);
    for (const auto& v : basis_) require_same_dim(ambient_, v.dim());
    if (!basis_.empty() && rank(Matrix<T>::from_points(basis_, ambient_), tol) != basis_.size())
      throw Error("subspace basis is not linearly independent");
  }
  static LinearSubspace zero(std::size_t ambient_dim) { return LinearSubspace(ambient_dim, {}); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Point<T>>& basis() const { return basis_; }

  bool contains(const Point<T>& v, double tol = default_tol<T>()) const {
    require_same_dim(ambient_, v.dim());
    auto rows = basis_;
    rows.push_back(v);
    return rank(Matrix<T>::from_points(rows, ambient_), tol) == basis_.size();
  }

 private:
  std::size_t ambient_;
  std::vector<Point<T>> basis_;
};

/// Orthogonal projection of p onto the orthogonal complement of s.
template <Scalar T>
Point<T> project_onto_complement(const Point<T>& p, const LinearSubspace<T>& s) {
  require_same_dim(s.ambient_dim(), p.dim());
  const auto& basis = s.basis();
  const std::size_t k = basis.size();
  if (k == 0) return p;
  Matrix<T> gram(k, k);
  std::vector<T> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis[i], p);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
  }
  auto coeff = solve(gram, rhs, 0.0);
  if (!coeff) throw Error("degenerate subspace basis");
  Point<T> out = p;
  for (std::size_t i = 0; i < k; ++i) out = out - (*coeff)[i] * basis[i];
  return out;
}

/// base + span(directions), with linearly independent directions.
template <Scalar T>
class AffineSubspace {
 public:
  AffineSubspace(Point<T> base, std::vector<Point<T>> directions, double tol = kPivotTol)
      : base_(std::move(base)), directions_(base_.dim(), std::move(directions), tol) {}

  const Point<T>& base() const { return base_; }
  const std::vector<Point<T>>& directions() const { return directions_.basis(); }
  const LinearSubspace<T>& direction_space() const { return directions_; }
  std::size_t dim() const { return directions_.dim(); }
  std::size_t ambient_dim() const { return base_.dim(); }

  bool contains(const Point<T>& p, double tol = default_tol<T>()) const {
    return directions_.contains(p - base_, tol);
  }

 private:
  Point<T> base_;
  LinearSubspace<T> directions_;
};

/// Smallest affine subspace containing all points.
template <Scalar T>
AffineSubspace<T> affine_hull(const std::vector<Point<T>>& points, double tol = default_tol<T>()) {
  if (points.empty()) throw Error("empty point set");
  const Point<T>& base = points.front();
  std::vector<Point<T>> dirs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    require_same_dim(base.dim(), points[i].dim());
    auto candidate = dirs;
    candidate.push_back(points[i] - base);
    if (rank(Matrix<T>::from_points(candidate, base.dim()), tol) == candidate.size()) dirs = std::move(candidate);
    if (dirs.size() == base.dim()) break;
  }
  return AffineSubspace<T>(base, std::move(dirs), tol);
}

}  // namespace hidden
