#pragma once

#include <vector>

#include "hidden/point.hpp"

namespace hidden {

enum class LpStatus { optimal, infeasible, unbounded };

template <Scalar T>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  T value{};
  std::vector<T> x;

  bool optimal() const { return status == LpStatus::optimal; }
};

namespace detail {

// Dense two-phase tableau simplex over nonnegative variables, Bland's rule.
// Exact scalars make every decision with true zero; floating scalars use eps.
template <Scalar T>
class Tableau {
 public:
  Tableau(const Matrix<T>& a, const std::vector<T>& b, const std::vector<T>& c, double eps)
      : m_(a.rows()), n_(a.cols()), eps_(eps), d_(m_ + 2, n_ + 2), basis_(m_), nonbasis_(n_ + 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) d_(i, j) = a(i, j);
      d_(i, n_) = T(-1);
      d_(i, n_ + 1) = b[i];
      basis_[i] = static_cast<long>(n_ + i);
    }
    for (std::size_t j = 0; j < n_; ++j) {
      d_(m_, j) = -c[j];
      nonbasis_[j] = static_cast<long>(j);
    }
    nonbasis_[n_] = -1;
    d_(m_ + 1, n_) = T(1);
  }

  LpResult<T> solve() {
    LpResult<T> out;
    if (m_ > 0) {
      std::size_t r = 0;
      for (std::size_t i = 1; i < m_; ++i)
        if (d_(i, n_ + 1) < d_(r, n_ + 1)) r = i;
      if (negative(d_(r, n_ + 1))) {
        pivot(r, n_);
        if (!run(1) || negative(d_(m_ + 1, n_ + 1))) return out;
        for (std::size_t i = 0; i < m_; ++i) {
          if (basis_[i] != -1) continue;
          long s = -1;
          for (std::size_t j = 0; j <= n_; ++j) {
            if (nonbasis_[j] == -1 || is_small(d_(i, j))) continue;
            if (s == -1 || abs_value(d_(i, j)) > abs_value(d_(i, static_cast<std::size_t>(s)))) s = static_cast<long>(j);
          }
          if (s != -1) pivot(i, static_cast<std::size_t>(s));
        }
      }
    }
    if (!run(2)) {
      out.status = LpStatus::unbounded;
      return out;
    }
    out.status = LpStatus::optimal;
    out.x.assign(n_, T(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < n_) out.x[static_cast<std::size_t>(basis_[i])] = d_(i, n_ + 1);
    out.value = d_(m_, n_ + 1);
    return out;
  }

 private:
  bool negative(const T& x) const {
    if constexpr (is_exact_v<T>) return x < 0;
    else return x < -eps_;
  }
  bool positive(const T& x) const {
    if constexpr (is_exact_v<T>) return x > 0;
    else return x > eps_;
  }
  bool is_small(const T& x) const { return !negative(x) && !positive(x); }

  void pivot(std::size_t r, std::size_t s) {
    const T inv = T(1) / d_(r, s);
    for (std::size_t i = 0; i < m_ + 2; ++i) {
      if (i == r || d_(i, s) == T(0)) continue;
      const T f = d_(i, s) * inv;
      for (std::size_t j = 0; j < n_ + 2; ++j)
        if (j != s && d_(r, j) != T(0)) d_(i, j) -= d_(r, j) * f;
      d_(i, s) = -f;
    }
    for (std::size_t j = 0; j < n_ + 2; ++j)
      if (j != s) d_(r, j) *= inv;
    d_(r, s) = inv;
    std::swap(basis_[r], nonbasis_[s]);
  }

  bool run(int phase) {
    const std::size_t obj = phase == 1 ? m_ + 1 : m_;
    for (std::size_t iter = 0;; ++iter) {
      if (iter > 200000) throw Error("LP iteration limit exceeded");
      long s = -1;
      for (std::size_t j = 0; j <= n_; ++j) {
        if (phase == 2 && nonbasis_[j] == -1) continue;
        if (!negative(d_(obj, j))) continue;
        if (s == -1 || nonbasis_[j] < nonbasis_[static_cast<std::size_t>(s)]) s = static_cast<long>(j);
      }
      if (s == -1) return true;
      const auto sc = static_cast<std::size_t>(s);
      long r = -1;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!positive(d_(i, sc))) continue;
        if (r == -1) {
          r = static_cast<long>(i);
          continue;
        }
        const auto rc = static_cast<std::size_t>(r);
        const T lhs = d_(i, n_ + 1) * d_(rc, sc);
        const T rhs = d_(rc, n_ + 1) * d_(i, sc);
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[rc])) r = static_cast<long>(i);
      }
      if (r == -1) return false;
      pivot(static_cast<std::size_t>(r), sc);
    }
  }

  std::size_t m_, n_;
  double eps_;
  Matrix<T> d_;
  std::vector<long> basis_, nonbasis_;
};

}  // namespace detail

/**
 * Maximizes c.x subject to a x <= b with x free.
 *
 * Free variables are split into positive and negative parts. The solver is
 * a Bland's-rule tableau simplex, so it terminates in exact arithmetic.
 */
template <Scalar T>
LpResult<T> maximize(const Matrix<T>& a, const std::vector<T>& b, const std::vector<T>& c,
                     double eps = kPivotTol) {
  if (b.size() != a.rows()) throw DimensionMismatch(a.rows(), b.size());
  if (c.size() != a.cols()) throw DimensionMismatch(a.cols(), c.size());
  const std::size_t n = a.cols();
  Matrix<T> split(a.rows(), 2 * n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      split(i, j) = a(i, j);
      split(i, j + n) = -a(i, j);
    }
  std::vector<T> c2(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    c2[j] = c[j];
    c2[j + n] = -c[j];
  }
  auto r = detail::Tableau<T>(split, b, c2, eps).solve();
  if (r.optimal()) {
    std::vector<T> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = r.x[j] - r.x[j + n];
    r.x = std::move(x);
  }
  return r;
}

/// Incrementally assembled system of inequalities row.x <= rhs.
template <Scalar T>
class LpBuilder {
 public:
  explicit LpBuilder(std::size_t vars) : vars_(vars) {}

  std::size_t vars() const { return vars_; }

  void leq(std::vector<T> row, T rhs) {
    if (row.size() != vars_) throw DimensionMismatch(vars_, row.size());
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
  }
  void geq(std::vector<T> row, const T& rhs) {
    for (auto& v : row) v = -v;
    leq(std::move(row), T(-rhs));
  }
  void eq(const std::vector<T>& row, const T& rhs) {
    leq(row, rhs);
    geq(row, rhs);
  }

  LpResult<T> maximize(const std::vector<T>& c, double eps = kPivotTol) const {
    Matrix<T> a = rows_.empty() ? Matrix<T>(0, vars_) : Matrix<T>::from_rows(rows_);
    return hidden::maximize(a, rhs_, c, eps);
  }

 private:
  std::size_t vars_;
  std::vector<std::vector<T>> rows_;
  std::vector<T> rhs_;
};

}  // namespace hidden
