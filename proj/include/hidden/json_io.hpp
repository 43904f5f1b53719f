#pragma once

#include <nlohmann/json.hpp>

#include "hidden/constructors.hpp"
#include "hidden/probe.hpp"
#include "hidden/reduction.hpp"
#include "hidden/simplex_lab.hpp"

namespace hidden {

using Json = nlohmann::ordered_json;

/// A JSON number, or a string "p/q" / "p" / decimal. Floats read into exact
/// mode take their shortest decimal spelling, so 0.1 becomes 1/10.
template <Scalar T>
T scalar_from_json(const Json& j) {
  if (j.is_number()) {
    const double v = j.get<double>();
    if constexpr (is_exact_v<T>) return rational_from_decimal_double(v);
    else return v;
  }
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if constexpr (is_exact_v<T>) return r;
    else return to_double(r);
  }
  throw Error("expected a number or a \"p/q\" string");
}

template <Scalar T>
Json scalar_to_json(const T& v) {
  if constexpr (is_exact_v<T>) return to_string(v);
  else return v;
}

template <Scalar T>
Point<T> point_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("a point must be a nonempty array");
  std::vector<T> c;
  for (const auto& v : j) c.push_back(scalar_from_json<T>(v));
  return Point<T>(std::move(c));
}

template <Scalar T>
Json point_to_json(const Point<T>& p) {
  Json a = Json::array();
  for (const T& v : p.coords()) a.push_back(scalar_to_json(v));
  return a;
}

/// Either a bare array of points or an object with a "points" array (such as a certificate).
template <Scalar T>
std::vector<Point<T>> points_from_json(const Json& j) {
  const Json& arr = j.is_object() ? j.at("points") : j;
  if (!arr.is_array()) throw Error("expected an array of points");
  std::vector<Point<T>> out;
  for (const auto& p : arr) out.push_back(point_from_json<T>(p));
  return out;
}

template <Scalar T>
Matrix<T> matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error("a matrix must be an array of rows");
  std::vector<std::vector<T>> rows;
  for (const auto& r : j) rows.push_back(point_from_json<T>(r).vec());
  if (rows.empty()) throw Error("a matrix needs at least one row");
  return Matrix<T>::from_rows(rows);
}

template <Scalar T>
Json matrix_to_json(const Matrix<T>& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(point_to_json(m.row_point(i)));
  return a;
}

namespace detail {

inline std::string body_type(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw Error("body must be an object with a \"type\"");
  return j.at("type").get<std::string>();
}

template <Scalar T>
HPolytope<T> hpolytope_from_json(const Json& j) {
  std::vector<T> b;
  for (const auto& v : j.at("b")) b.push_back(scalar_from_json<T>(v));
  return HPolytope<T>(matrix_from_json<T>(j.at("A")), std::move(b));
}

template <Scalar T>
VPolytope<T> vpolytope_from_json(const Json& j) {
  return VPolytope<T>(points_from_json<T>(j.at("vertices")));
}

inline SimplexBody simplex_from_json(const Json& j) {
  const auto d = j.at("dim").get<long long>();
  if (d < 1) throw Error("simplex dimension must be at least 1");
  return SimplexBody(static_cast<std::size_t>(d));
}

}  // namespace detail

inline ConvexBody body_from_json(const Json& j) {
  const std::string type = detail::body_type(j);
  if (type == "hpolytope") return detail::hpolytope_from_json<double>(j);
  if (type == "vpolytope") return detail::vpolytope_from_json<double>(j);
  if (type == "ball")
    return SmoothBody::ball(point_from_json<double>(j.at("center")), scalar_from_json<double>(j.at("radius")));
  if (type == "ellipsoid")
    return SmoothBody::ellipsoid(point_from_json<double>(j.at("center")), matrix_from_json<double>(j.at("Q")));
  if (type == "rounded_polygon")
    return RoundedPolygon(points_from_json<double>(j.at("vertices")), scalar_from_json<double>(j.at("radius")));
  if (type == "simplex") return detail::simplex_from_json(j);
  throw Error("unknown body type '" + type + "'");
}

inline ExactBody exact_body_from_json(const Json& j) {
  const std::string type = detail::body_type(j);
  if (type == "hpolytope") return detail::hpolytope_from_json<Rational>(j);
  if (type == "vpolytope") return detail::vpolytope_from_json<Rational>(j);
  if (type == "simplex") return detail::simplex_from_json(j);
  throw Error("exact mode requires a polytope or simplex body, got '" + type + "'");
}

template <Scalar T>
Json hpolytope_to_json(const HPolytope<T>& p) {
  Json b = Json::array();
  for (const auto& v : p.b()) b.push_back(scalar_to_json(v));
  return Json{{"type", "hpolytope"}, {"A", matrix_to_json(p.a())}, {"b", b}};
}

template <Scalar T>
Json support_to_json(const SupportFunctional<T>& s) {
  return Json{{"normal", point_to_json(s.normal)}, {"offset", scalar_to_json(s.offset)}};
}

template <Scalar T>
Json certificate_to_json(const HiddenSetCertificate<T>& c) {
  Json pts = Json::array(), ws = Json::array();
  for (const auto& p : c.points) pts.push_back(point_to_json(p));
  for (const auto& w : c.witnesses)
    ws.push_back(Json{{"i", w.i}, {"j", w.j}, {"t", scalar_to_json(w.t)}, {"point", point_to_json(w.point)}});
  return Json{{"points", pts}, {"witnesses", ws}, {"mode", std::string(to_string(c.mode))}};
}

template <Scalar T>
HiddenSetCertificate<T> certificate_from_json(const Json& j) {
  HiddenSetCertificate<T> c;
  c.points = points_from_json<T>(j.at("points"));
  c.mode = j.contains("mode") ? parse_segment_mode(j.at("mode").get<std::string>()) : SegmentMode::closed;
  for (const auto& w : j.at("witnesses"))
    c.witnesses.push_back({w.at("i").get<std::size_t>(), w.at("j").get<std::size_t>(), scalar_from_json<T>(w.at("t")),
                           point_from_json<T>(w.at("point"))});
  return c;
}

template <Scalar T>
Json failing_pair_to_json(const FailingPair<T>& f) {
  return Json{{"failing_pair", {{"i", f.i}, {"j", f.j}}},
              {"separator", f.separator ? support_to_json(*f.separator) : Json(nullptr)}};
}

template <Scalar T>
Json affine_map_to_json(const AffineMap<T>& m) {
  return Json{{"M", matrix_to_json(m.m)}, {"s", point_to_json(m.s)}};
}

template <Scalar T>
AffineMap<T> affine_map_from_json(const Json& j) {
  return AffineMap<T>(matrix_from_json<T>(j.at("M")), point_from_json<T>(j.at("s")));
}

inline Json trace_to_json(const ConstructionTrace& t) {
  const char* key = t.kind == "flat_piece" ? "delta" : "eps";
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back(Json{{"x", point_to_json(s.x)},
                         {"y", point_to_json(s.y)},
                         {key, s.offset},
                         {"resample_count", s.resample_count}});
  return Json{{"kind", t.kind}, {"seed", t.seed}, {"steps", steps}};
}

inline Json bound_to_json(const CapacityBound& b) {
  return Json{{"in_aff", b.in_aff}, {"total", b.total}, {"affine_dim", b.affine_dim}, {"ambient_dim", b.ambient_dim}};
}

/// Report without timings, so equal inputs give byte-identical files.
inline Json report_to_json(const CapacityReport& r) {
  Json curve = Json::array();
  for (const auto& row : r.curve) curve.push_back(Json{{"size", row.size}, {"found", row.found}});
  return Json{{"body", r.body_kind},
              {"budget", r.budget},
              {"seed", r.seed},
              {"upper_bound", r.upper_bound          ? bound_to_json(*r.upper_bound)
                              : r.unbounded_evidence ? Json("unbounded-evidence")
                                                     : Json(nullptr)},
              {"unbounded_evidence", r.unbounded_evidence},
              {"best_found_size", r.best_found.size()},
              {"best_found", certificate_to_json(r.best_found)},
              {"method", r.method},
              {"bound_method", r.upper_bound ? Json("facet-pigeonhole") : Json(nullptr)},
              {"budget_used", r.budget_used},
              {"verdict", r.verdict},
              {"curve", curve}};
}

inline std::string curve_csv(const CapacityReport& r) {
  std::string out = "size,found,wall_ms\n";
  char buf[64];
  for (const auto& row : r.curve) {
    std::snprintf(buf, sizeof buf, "%zu,%d,%.3f\n", row.size, row.found ? 1 : 0, row.wall_ms);
    out += buf;
  }
  return out;
}

inline Json falsifier_report_to_json(const FalsifierReport& f) {
  return Json{{"dim", f.dim},
              {"trials", f.trials},
              {"sigma_less_exclusion", {{"pairs", f.exclusion_pairs}, {"violations", f.exclusion_violations}}},
              {"support_necessity",
               {{"pairs", f.necessity_pairs}, {"meeting", f.necessity_meeting}, {"violations", f.necessity_violations}}},
              {"negative_support",
               {{"points", f.negative_support_points}, {"violations", f.negative_support_violations}}},
              {"violations", f.violations}};
}

inline Json simplex_capacity_to_json(const SimplexCapacityReport& r) {
  return Json{{"dim", r.dim},
              {"trials", r.trials},
              {"upper_bound", bound_to_json(r.bound)},
              {"best_found_size", r.best_found.size()},
              {"best_found", certificate_to_json(r.best_found)},
              {"max_in_aff", r.max_in_aff},
              {"max_outside_aff", r.max_outside_aff},
              {"candidates", {{"sigma_less", r.candidates_less}, {"sigma_one", r.candidates_one},
                              {"sigma_greater", r.candidates_greater}}},
              {"size_histogram", r.size_histogram},
              {"violations", r.violations},
              {"violation_log", r.violation_log}};
}

}  // namespace hidden
