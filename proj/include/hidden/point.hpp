#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hidden/error.hpp"
#include "hidden/scalar.hpp"

namespace hidden {

/// Largest ambient dimension accepted anywhere in the library.
inline constexpr std::size_t kMaxDimension = 64;

inline void check_dimension(std::size_t d) {
  if (d < 1 || d > kMaxDimension)
    throw Error("dimension must be in [1, " + std::to_string(kMaxDimension) + "], got " + std::to_string(d));
}

/**
 * A point (or vector) of R^d with coordinates in T.
 *
 * Dimension is fixed at construction, lies in [1, 64], and all coordinates
 * are finite. Values are immutable; arithmetic returns new points.
 */
template <Scalar T>
class Point {
 public:
  explicit Point(std::vector<T> coords) : coords_(std::move(coords)) {
    check_dimension(coords_.size());
    if constexpr (!is_exact_v<T>) {
      for (const T& c : coords_)
        if (!std::isfinite(c)) throw Error("point coordinates must be finite");
    }
  }
  Point(std::initializer_list<T> coords) : Point(std::vector<T>(coords)) {}

  static Point zero(std::size_t d) { return Point(std::vector<T>(d, T(0))); }
  static Point unit(std::size_t d, std::size_t i) {
    std::vector<T> c(d, T(0));
    c.at(i) = T(1);
    return Point(std::move(c));
  }

  std::size_t dim() const { return coords_.size(); }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const T> coords() const { return coords_; }
  const std::vector<T>& vec() const { return coords_; }

  friend Point operator+(const Point& a, const Point& b) {
    require_same_dim(a.dim(), b.dim());
    std::vector<T> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return Point(std::move(c));
  }
  friend Point operator-(const Point& a, const Point& b) {
    require_same_dim(a.dim(), b.dim());
    std::vector<T> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return Point(std::move(c));
  }
  friend Point operator-(const Point& a) {
    std::vector<T> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a[i];
    return Point(std::move(c));
  }
  friend Point operator*(const T& s, const Point& a) {
    std::vector<T> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a[i];
    return Point(std::move(c));
  }
  friend Point operator*(const Point& a, const T& s) { return s * a; }
  friend Point operator/(const Point& a, const T& s) {
    std::vector<T> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] / s;
    return Point(std::move(c));
  }
  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<T> coords_;
};

template <Scalar T>
T dot(const Point<T>& a, const Point<T>& b) {
  require_same_dim(a.dim(), b.dim());
  T s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

template <Scalar T>
T norm_squared(const Point<T>& a) {
  return dot(a, a);
}

template <Scalar T>
double norm(const Point<T>& a) {
  return std::sqrt(to_double(norm_squared(a)));
}

inline Point<double> normalized(const Point<double>& a) {
  double n = norm(a);
  if (!(n > 0.0)) throw Error("cannot normalize a zero vector");
  return a / n;
}

/// a + t (b - a)
template <Scalar T>
Point<T> lerp(const Point<T>& a, const Point<T>& b, const T& t) {
  require_same_dim(a.dim(), b.dim());
  std::vector<T> c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + t * (b[i] - a[i]);
  return Point<T>(std::move(c));
}

template <Scalar U, Scalar T>
Point<U> point_cast(const Point<T>& p) {
  std::vector<U> c;
  c.reserve(p.dim());
  for (const T& x : p.coords()) {
    if constexpr (std::is_same_v<U, T>)
      c.push_back(x);
    else if constexpr (is_exact_v<T>)
      c.push_back(U(to_double(x)));
    else
      c.push_back(from_double<U>(x));
  }
  return Point<U>(std::move(c));
}

/// Closed segment [a, b] = {a + t(b - a) : t in [0, 1]}.
template <Scalar T>
struct Segment {
  Point<T> a;
  Point<T> b;

  Segment(Point<T> from, Point<T> to) : a(std::move(from)), b(std::move(to)) {
    require_same_dim(a.dim(), b.dim());
  }
  std::size_t dim() const { return a.dim(); }
  Point<T> at(const T& t) const { return lerp(a, b, t); }
  Segment reversed() const { return Segment(b, a); }
};

/// Dense row-major matrix.
template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error("ragged matrix");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
    }
    return m;
  }
  static Matrix from_points(const std::vector<Point<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require_same_dim(cols, rows[i].dim());
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Point<T> row_point(std::size_t i) const { return Point<T>(std::vector<T>(row(i).begin(), row(i).end())); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch(a.cols_, b.rows_);
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend Point<T> operator*(const Matrix& a, const Point<T>& x) {
    require_same_dim(a.cols_, x.dim());
    std::vector<T> y(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return Point<T>(std::move(y));
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// <row_i(A), x> without materializing a Point.
template <Scalar T>
T row_dot(const Matrix<T>& a, std::size_t i, const Point<T>& x) {
  T s(0);
  auto r = a.row(i);
  for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * x[j];
  return s;
}

template <Scalar U, Scalar T>
Matrix<U> matrix_cast(const Matrix<T>& m) {
  Matrix<U> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<U, T>)
        out(i, j) = m(i, j);
      else if constexpr (is_exact_v<T>)
        out(i, j) = U(to_double(m(i, j)));
      else
        out(i, j) = from_double<U>(m(i, j));
    }
  return out;
}

}  // namespace hidden
