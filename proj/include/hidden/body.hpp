#pragma once

#include <variant>

#include "hidden/hpolytope.hpp"
#include "hidden/oracle_body.hpp"
#include "hidden/rounded_polygon.hpp"
#include "hidden/simplex_body.hpp"
#include "hidden/smooth_body.hpp"
#include "hidden/vpolytope.hpp"

namespace hidden {

/// Any body in floating-point mode.
using ConvexBody = std::variant<HPolytope<double>, VPolytope<double>, SmoothBody, RoundedPolygon, SimplexBody, OracleBody>;

/// Bodies that support exact rational predicates.
using ExactBody = std::variant<HPolytope<Rational>, VPolytope<Rational>, SimplexBody>;

inline std::size_t dim(const ConvexBody& b) {
  return std::visit([](const auto& x) { return x.dim(); }, b);
}
inline std::size_t dim(const ExactBody& b) {
  return std::visit([](const auto& x) { return x.dim(); }, b);
}

template <class Body>
std::size_t dim_of(const Body& b) {
  if constexpr (std::is_same_v<Body, ConvexBody> || std::is_same_v<Body, ExactBody>) return dim(b);
  else return b.dim();
}

inline std::string_view kind_name(const ConvexBody& b) {
  switch (b.index()) {
    case 0: return "hpolytope";
    case 1: return "vpolytope";
    case 2: return std::get<SmoothBody>(b).kind() == SmoothBody::Kind::ball ? "ball" : "ellipsoid";
    case 3: return "rounded_polygon";
    case 4: return "simplex";
    default: return "oracle";
  }
}

inline Membership contains(const ConvexBody& b, const Point<double>& x, double tol = kDefaultTol) {
  return std::visit([&](const auto& body) { return contains(body, x, tol); }, b);
}
inline Membership contains(const ExactBody& b, const Point<Rational>& x, double tol = 0.0) {
  return std::visit([&](const auto& body) { return contains(body, x, tol); }, b);
}

inline Membership contains_relative(const ConvexBody& b, const Point<double>& x, double tol = kDefaultTol) {
  return std::visit([&](const auto& body) { return contains_relative(body, x, tol); }, b);
}
inline Membership contains_relative(const ExactBody& b, const Point<Rational>& x, double tol = 0.0) {
  return std::visit([&](const auto& body) { return contains_relative(body, x, tol); }, b);
}

inline Point<double> interior_point(const ConvexBody& b) {
  return std::visit(
      [](const auto& body) -> Point<double> {
        if constexpr (std::is_same_v<std::decay_t<decltype(body)>, SimplexBody>) return interior_point<double>(body);
        else return interior_point(body);
      },
      b);
}
inline Point<Rational> interior_point(const ExactBody& b) {
  return std::visit(
      [](const auto& body) -> Point<Rational> {
        if constexpr (std::is_same_v<std::decay_t<decltype(body)>, SimplexBody>) return interior_point<Rational>(body);
        else return interior_point(body);
      },
      b);
}

inline SupportFunctional<double> support_functional(const ConvexBody& b, const Point<double>& x,
                                                    double tol = kDefaultTol) {
  return std::visit([&](const auto& body) { return support_functional(body, x, tol); }, b);
}
inline SupportFunctional<double> support_functional(const ExactBody& b, const Point<Rational>& x,
                                                    double tol = 0.0) {
  return std::visit([&](const auto& body) { return support_functional(body, x, tol); }, b);
}

inline Point<double> boundary_point_in_direction(const ConvexBody& b, const Point<double>& dir) {
  return std::visit([&](const auto& body) { return boundary_point_in_direction(body, dir); }, b);
}
inline Point<Rational> boundary_point_in_direction(const ExactBody& b, const Point<Rational>& dir) {
  return std::visit([&](const auto& body) { return boundary_point_in_direction(body, dir); }, b);
}

inline HitResult<double> segment_meets(const ConvexBody& b, const Segment<double>& s, SegmentMode mode,
                                       double tol = kDefaultTol) {
  return std::visit([&](const auto& body) { return segment_meets(body, s, mode, tol); }, b);
}
inline HitResult<Rational> segment_meets(const ExactBody& b, const Segment<Rational>& s, SegmentMode mode,
                                         double tol = 0.0) {
  return std::visit([&](const auto& body) { return segment_meets(body, s, mode, tol); }, b);
}

inline bool segment_hits(const ConvexBody& b, const Point<double>& p, const Point<double>& q, SegmentMode mode,
                         double tol = kDefaultTol) {
  return std::visit([&](const auto& body) { return segment_hits(body, p, q, mode, tol); }, b);
}
inline bool segment_hits(const ExactBody& b, const Point<Rational>& p, const Point<Rational>& q, SegmentMode mode,
                         double tol = 0.0) {
  return std::visit([&](const auto& body) { return segment_hits(body, p, q, mode, tol); }, b);
}

/// Floating-point copy of an exact body.
inline ConvexBody to_float(const ExactBody& b) {
  return std::visit(
      [](const auto& body) -> ConvexBody {
        using B = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<B, HPolytope<Rational>>) {
          std::vector<double> rhs;
          for (const auto& v : body.b()) rhs.push_back(to_double(v));
          return HPolytope<double>(matrix_cast<double>(body.a()), std::move(rhs));
        } else if constexpr (std::is_same_v<B, VPolytope<Rational>>) {
          std::vector<Point<double>> vs;
          for (const auto& v : body.vertices()) vs.push_back(point_cast<double>(v));
          return VPolytope<double>(std::move(vs));
        } else {
          return body;
        }
      },
      b);
}

/**
 * Rough outer radius about the interior point: the largest distance to the
 * boundary along the coordinate axes. Used only to scale initial offsets.
 * Returns 1 for bodies unbounded along some axis.
 */
inline double circumradius_estimate(const ConvexBody& b) {
  if (const auto* s = std::get_if<SmoothBody>(&b); s && s->kind() == SmoothBody::Kind::ball) return s->radius();
  const Point<double> c = interior_point(b);
  const std::size_t d = dim(b);
  double best = 0.0;
  try {
    for (std::size_t i = 0; i < d; ++i)
      for (double sgn : {1.0, -1.0}) {
        Point<double> e = sgn * Point<double>::unit(d, i);
        best = std::max(best, norm(boundary_point_in_direction(b, e) - c));
      }
  } catch (const Error&) {
    return 1.0;
  }
  return best > 0.0 ? best : 1.0;
}

}  // namespace hidden
