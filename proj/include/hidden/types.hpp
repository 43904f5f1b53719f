#pragma once

#include <optional>
#include <string_view>

#include "hidden/point.hpp"

namespace hidden {

/// Three-way membership classification.
enum class Membership { inside, boundary, outside };

inline std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::inside: return "inside";
    case Membership::boundary: return "boundary";
    case Membership::outside: return "outside";
  }
  return "?";
}

inline bool in_body(Membership m) { return m != Membership::outside; }

/// Which part of the body a segment must meet: the closed body or its relative interior.
enum class SegmentMode { closed, open_interior };

inline std::string_view to_string(SegmentMode m) {
  return m == SegmentMode::closed ? "closed" : "open-interior";
}

inline SegmentMode parse_segment_mode(std::string_view s) {
  if (s == "closed") return SegmentMode::closed;
  if (s == "open-interior" || s == "open_interior") return SegmentMode::open_interior;
  throw Error("unknown segment mode '" + std::string(s) + "'");
}

/**
 * Supporting half-space {x : <normal, x> <= offset} with offset = sup <C, normal>.
 *
 * Floating-point functionals carry a unit normal. Exact ones keep the
 * rational normal unscaled, since membership tests are scale-invariant.
 */
template <Scalar T>
struct SupportFunctional {
  Point<T> normal;
  T offset;

  T value(const Point<T>& x) const { return dot(normal, x); }

  /// Unit-normal floating-point copy.
  SupportFunctional<double> unit() const {
    Point<double> n = point_cast<double>(normal);
    double len = norm(n);
    if (!(len > 0.0)) throw Error("zero support normal");
    return {n / len, to_double(offset) / len};
  }
};

/**
 * Outcome of intersecting a segment [a, b] with a body.
 *
 * When hit, [t_lo, t_hi] is the parameter interval inside the body (closed
 * mode) or the closure of the interval inside the relative interior, and
 * witness = a + witness_t (b - a) lies in the body. When not hit, separator
 * (if the body kind provides one) has both endpoints strictly on its far side.
 */
template <Scalar T>
struct HitResult {
  bool hit = false;
  T t_lo{};
  T t_hi{};
  T witness_t{};
  std::optional<Point<T>> witness;
  std::optional<SupportFunctional<T>> separator;
};

}  // namespace hidden
