#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hidden/types.hpp"

namespace hidden {

/// Witness for the pair i < j: point = points[i] + t (points[j] - points[i]) lies in the body.
template <Scalar T>
struct PairWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  T t{};
  Point<T> point;
};

/// A point set together with one body point on every connecting segment.
template <Scalar T>
struct HiddenSetCertificate {
  std::vector<Point<T>> points;
  std::vector<PairWitness<T>> witnesses;  // ordered by (i, j)
  SegmentMode mode = SegmentMode::closed;

  std::size_t size() const { return points.size(); }

  const PairWitness<T>* witness(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    for (const auto& w : witnesses)
      if (w.i == i && w.j == j) return &w;
    return nullptr;
  }
};

/// The lexicographically first pair whose segment misses the body.
template <Scalar T>
struct FailingPair {
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<SupportFunctional<T>> separator;
};

template <Scalar T>
using HidingVerdict = std::variant<HiddenSetCertificate<T>, FailingPair<T>>;

template <class Body, Scalar T>
void require_outside(const Body& body, const std::vector<Point<T>>& points, double tol) {
  for (const auto& p : points)
    if (contains(body, p, tol) != Membership::outside) throw Error("candidate not outside body");
}

/**
 * Checks every pair of points against the body. The witness returned by the
 * segment test for the pair (i, j) is stored with t measured from points[i].
 */
template <class Body, Scalar T>
HidingVerdict<T> is_hidden(const Body& body, const std::vector<Point<T>>& points,
                           SegmentMode mode = SegmentMode::closed, double tol = default_tol<T>()) {
  if (points.size() < 2) throw Error("hidden set check needs at least two points");
  require_outside(body, points, tol);
  HiddenSetCertificate<T> cert;
  cert.points = points;
  cert.mode = mode;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      auto r = segment_meets(body, Segment<T>(points[i], points[j]), mode, tol);
      if (!r.hit) return FailingPair<T>{i, j, r.separator};
      cert.witnesses.push_back({i, j, r.witness_t, *r.witness});
    }
  return cert;
}

/**
 * Independent re-check of a certificate that never calls the segment test:
 * every point is outside, and every pair has a witness on its segment that the
 * membership oracle places in the body (in the relative interior for
 * open-interior certificates).
 */
template <class Body, Scalar T>
bool verify_certificate(const Body& body, const HiddenSetCertificate<T>& cert, double tol = default_tol<T>()) {
  const std::size_t n = cert.points.size();
  for (const auto& p : cert.points)
    if (contains(body, p, tol) != Membership::outside) return false;
  if (cert.witnesses.size() != n * (n - (n > 0 ? 1 : 0)) / 2) return false;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      const auto& w = cert.witnesses[k];
      if (w.i != i || w.j != j) return false;
      if (sign(w.t, 0.0) < 0 || sign(T(w.t - T(1)), 0.0) > 0) return false;
      const Point<T> expected = lerp(cert.points[i], cert.points[j], w.t);
      if constexpr (is_exact_v<T>) {
        if (!(expected == w.point)) return false;
      } else {
        double scale = 1.0 + std::max(norm(cert.points[i]), norm(cert.points[j]));
        if (norm(expected - w.point) > 1e-12 * scale) return false;
      }
      auto m = cert.mode == SegmentMode::closed ? contains(body, w.point, tol) : contains_relative(body, w.point, tol);
      if (cert.mode == SegmentMode::closed ? !in_body(m) : m != Membership::inside) return false;
    }
  return true;
}

/// Certificate restricted to the given (increasing) indices.
template <Scalar T>
HiddenSetCertificate<T> restrict_certificate(const HiddenSetCertificate<T>& cert, const std::vector<std::size_t>& idx) {
  HiddenSetCertificate<T> out;
  out.mode = cert.mode;
  for (std::size_t a : idx) out.points.push_back(cert.points.at(a));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const auto* w = cert.witness(idx[a], idx[b]);
      if (!w) throw Error("certificate is missing a witness");
      PairWitness<T> nw = *w;
      nw.i = a;
      nw.j = b;
      if (idx[a] > idx[b]) nw.t = T(1) - nw.t;
      out.witnesses.push_back(std::move(nw));
    }
  return out;
}

}  // namespace hidden
