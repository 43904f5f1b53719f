#pragma once

#include <cmath>
#include <algorithm>
#include <functional>
#include <numeric>
#include <numbers>
#include <random>
#include <vector>

#include "hidden/body.hpp"
#include "hidden/halton.hpp"
#include "hidden/hidden_set.hpp"

namespace hidden {

/**
 * n points equally spaced on the circle of radius R about the origin. They
 * are hidden behind the closed unit disk exactly when 1 < R < 1/cos(pi/n):
 * the chord between neighbours passes at distance R cos(pi/n) from the
 * centre, and every other chord passes closer.
 */
inline std::vector<Point<double>> disk_hidden_points(std::size_t n, double radius) {
  if (n < 2) throw Error("disk construction needs at least two points");
  const double upper = 1.0 / std::cos(std::numbers::pi / static_cast<double>(n));
  if (!(radius > 1.0) || !(radius < upper)) throw Error("radius out of hiding range");
  std::vector<Point<double>> out;
  for (std::size_t k = 0; k < n; ++k) {
    double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    out.push_back(Point<double>{radius * std::cos(a), radius * std::sin(a)});
  }
  return out;
}

/// z lies in Lambda(x, eps): the segment from x + eps y_x to z meets the relative interior.
template <class Body>
bool lambda_contains(const Body& body, const Point<double>& x, double eps, const Point<double>& z,
                     double tol = kDefaultTol) {
  if (!(eps > 0.0)) throw Error("lambda set needs eps > 0");
  const Point<double> y = support_functional(body, x, tol).normal;
  return segment_hits(body, x + eps * y, z, SegmentMode::open_interior, tol);
}

/// One accepted point of a construction: boundary point x, normal y, offset (eps or delta).
struct ConstructionStep {
  Point<double> x;
  Point<double> y;
  double offset = 0.0;
  std::size_t resample_count = 0;

  Point<double> point() const { return x + offset * y; }
};

struct ConstructionTrace {
  std::string kind;  // "smooth" or "flat_piece"
  std::uint64_t seed = 0;
  std::vector<ConstructionStep> steps;
};

struct Construction {
  HiddenSetCertificate<double> certificate;
  ConstructionTrace trace;
};

/// Raised when resampling or offset halving runs out; carries what was built so far.
class ConstructionStalled : public Error {
 public:
  ConstructionStalled(const std::string& what, Construction partial) : Error(what), partial_(std::move(partial)) {}
  const Construction& partial() const { return partial_; }

 private:
  Construction partial_;
};

struct SmoothOptions {
  std::size_t pool_size = 256;
  std::size_t max_resamples = 100;
  double eps_floor = 1e-12;
  std::optional<double> eps_init;  // default: 0.1 * circumradius estimate
  double tol = kDefaultTol;
  std::function<void(std::size_t)> on_accept;  // called with the new size after each acceptance
};

namespace detail {

template <class Body>
double circumradius_of(const Body& body) {
  if constexpr (std::is_same_v<Body, ConvexBody>) return circumradius_estimate(body);
  else return circumradius_estimate(ConvexBody(body));
}

template <class Body>
HiddenSetCertificate<double> certify(const Body& body, const std::vector<Point<double>>& pts, double tol) {
  HiddenSetCertificate<double> cert;
  cert.mode = SegmentMode::closed;
  if (pts.size() < 2) {
    cert.points = pts;
    require_outside(body, pts, tol);
    return cert;
  }
  auto v = is_hidden(body, pts, SegmentMode::closed, tol);
  if (auto* c = std::get_if<HiddenSetCertificate<double>>(&v)) return std::move(*c);
  throw Error("constructed set failed re-verification");
}

// Shared driver: seeds(i) gives the i-th direction, seed_count bounds the stream.
template <class Body, class Seeds>
Construction smooth_sequence(const Body& body, std::size_t n, Seeds&& seeds, std::size_t seed_count,
                             std::uint64_t seed, const SmoothOptions& opt) {
  if (n < 2) throw Error("construction needs n >= 2");
  const double tol = opt.tol;
  const double eps_init = opt.eps_init.value_or(0.1 * circumradius_of(body));
  std::vector<std::optional<std::pair<Point<double>, Point<double>>>> cache;
  auto seed_point = [&](std::size_t i) -> const std::pair<Point<double>, Point<double>>& {
    if (cache.size() <= i) cache.resize(i + 1);
    if (!cache[i]) {
      Point<double> x = boundary_point_in_direction(body, seeds(i));
      Point<double> y = support_functional(body, x, tol).normal;
      cache[i].emplace(std::move(x), std::move(y));
    }
    return *cache[i];
  };

  Construction out;
  out.trace.kind = "smooth";
  out.trace.seed = seed;
  std::vector<Point<double>> pts;
  auto stall = [&](const std::string& why) {
    Construction partial = out;
    partial.certificate = certify(body, pts, tol);
    return ConstructionStalled("construction stalled: " + why, std::move(partial));
  };

  std::size_t idx = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t resamples = 0;
    bool accepted = false;
    while (!accepted) {
      if (resamples > opt.max_resamples) throw stall("resample limit reached at point " + std::to_string(k));
      if (idx >= seed_count) throw stall("seed directions exhausted at point " + std::to_string(k));
      const auto [x, y] = seed_point(idx++);
      bool in_all = true;
      for (const auto& p : pts)
        if (!segment_hits(body, p, x, SegmentMode::open_interior, tol)) {
          in_all = false;
          break;
        }
      if (!in_all) {
        ++resamples;
        continue;
      }
      // Empirical stand-in for the measure condition: among the next pool
      // seeds, at most pool / 2^(k+1) may fall outside Lambda(x, eps).
      const std::size_t pool_end = std::min(seed_count, idx + opt.pool_size);
      const std::size_t pool = pool_end - idx;
      const std::size_t allowed = k + 1 >= 64 ? 0 : (pool >> (k + 1));
      for (double eps = eps_init; eps >= opt.eps_floor && !accepted; eps /= 2.0) {
        const Point<double> p = x + eps * y;
        if (contains(body, p, tol) != Membership::outside) continue;
        bool ok = true;
        for (const auto& q : pts)
          if (!segment_hits(body, q, p, SegmentMode::open_interior, tol)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        std::size_t excluded = 0;
        for (std::size_t j = idx; j < pool_end && excluded <= allowed; ++j)
          if (!segment_hits(body, p, seed_point(j).first, SegmentMode::open_interior, tol)) ++excluded;
        if (excluded > allowed) continue;
        pts.push_back(p);
        out.trace.steps.push_back({x, y, eps, resamples});
        accepted = true;
      }
      if (!accepted) ++resamples;
    }
    if (opt.on_accept) opt.on_accept(pts.size());
  }
  out.certificate = certify(body, pts, tol);
  return out;
}

}  // namespace detail

/**
 * n points x_k + eps_k y_k hidden behind a strictly convex body, built one at
 * a time: x_k is taken from the low-discrepancy boundary seeds and must lie
 * in Lambda(x_j, eps_j) for every earlier j; eps_k is halved from eps_init
 * until the new point is outside, sees every earlier point through the
 * interior, and keeps enough upcoming seeds available.
 */
template <class Body>
Construction smooth_hidden_sequence(const Body& body, std::size_t n, std::uint64_t seed,
                                    const SmoothOptions& options = {}) {
  DirectionStream stream(dim_of(body), seed);
  return detail::smooth_sequence(body, n, stream, std::numeric_limits<std::size_t>::max(), seed, options);
}

/// Same construction driven by an explicit list of seed directions.
template <class Body>
Construction smooth_hidden_sequence(const Body& body, std::size_t n, const std::vector<Point<double>>& directions,
                                    const SmoothOptions& options = {}) {
  return detail::smooth_sequence(
      body, n, [&](std::size_t i) { return directions[i]; }, directions.size(), 0, options);
}

/// A flat piece of the boundary: the boundary within eps of center lies in the line <normal, .> = <normal, center>.
struct FlatPiece {
  Point<double> center;
  Point<double> normal;
  double eps = 0.0;
};

/**
 * Sampled flatness check with `probes` points: half on the chord of length
 * 2 eps through the center (each must be a boundary point on the supporting
 * line), half on the inner half circle of radius 0.999 eps (each must be
 * interior). Also checks that normal is the supporting normal at center.
 */
inline bool verify_flat_piece(const RoundedPolygon& body, const FlatPiece& piece, std::size_t probes = 50,
                              double tol = kDefaultTol) {
  if (!(piece.eps > 0.0)) return false;
  if (std::abs(norm(piece.normal) - 1.0) > 1e-12) return false;
  if (contains(body, piece.center, tol) != Membership::boundary) return false;
  auto sf = support_functional(body, piece.center, tol);
  if (norm(sf.normal - piece.normal) > 1e-9) return false;
  const Point<double> t{-piece.normal[1], piece.normal[0]};
  const double level = dot(piece.normal, piece.center);
  const std::size_t half = std::max<std::size_t>(probes / 2, 2);
  for (std::size_t j = 0; j < half; ++j) {
    double s = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(half - 1);
    Point<double> c = piece.center + (piece.eps * s) * t;
    if (contains(body, c, tol) != Membership::boundary) return false;
    if (std::abs(dot(piece.normal, c) - level) > tol * (1.0 + std::abs(level))) return false;
  }
  for (std::size_t j = 0; j < probes - half; ++j) {
    double phi = std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(probes - half);
    Point<double> z = piece.center + (0.999 * piece.eps) * (std::cos(phi) * t - std::sin(phi) * piece.normal);
    if (contains(body, z, tol) != Membership::inside) return false;
  }
  return true;
}

/// Pairwise normal separation |y_n - y_m| >= eps_n + eps_m (up to 1e-12).
inline void check_separation(const FlatPiece& p, const FlatPiece& q) {
  if (norm(p.normal - q.normal) < p.eps + q.eps - 1e-12) throw Error("normals too close");
}

namespace detail {

inline double distance_to_segment(const Point<double>& x, const Point<double>& a, const Point<double>& b) {
  const Point<double> ab = b - a;
  const double len2 = dot(ab, ab);
  const double t = len2 > 0.0 ? std::clamp(dot(x - a, ab) / len2, 0.0, 1.0) : 0.0;
  return norm(x - (a + t * ab));
}

}  // namespace detail

/**
 * One piece per edge of the polygon, centred on the translated edge, with
 * eps = fraction * (half the edge length), then shrunk so every pair meets
 * the separation hypothesis.
 */
inline std::vector<FlatPiece> flat_pieces(const RoundedPolygon& body, double fraction = 1.0) {
  std::vector<FlatPiece> out;
  const double r = body.radius();
  for (std::size_t k = 0; k < body.edge_count(); ++k) {
    auto [p, q] = body.edge(k);
    Point<double> n = body.edge_normal(k);
    const Point<double> c = 0.5 * (p + q) + r * n;
    // The eps-ball must not reach the rest of the boundary: the other
    // translated edges and the arcs at corners away from this edge.
    double room = 0.5 * norm(q - p);
    for (std::size_t j = 0; j < body.edge_count(); ++j) {
      if (j == k) continue;
      auto [a, b] = body.edge(j);
      const Point<double> m = body.edge_normal(j);
      room = std::min(room, detail::distance_to_segment(c, a + r * m, b + r * m));
      for (const auto& v : {a, b})
        if (!(v == p) && !(v == q)) room = std::min(room, norm(c - v) - r);
    }
    out.push_back({c, n, fraction * room});
  }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = 0; b < out.size(); ++b)
      if (a != b) out[a].eps = std::min(out[a].eps, 0.5 * norm(out[a].normal - out[b].normal));
  std::erase_if(out, [](const FlatPiece& f) { return !(f.eps > 0.0); });
  return out;
}

/**
 * Points x_n + delta_n y_n, one per flat piece. delta_0 = eps_0^2 / 3; each
 * later delta_n starts at eps_n^2 / 3 and is halved until the new point sees
 * every earlier point through the interior. A nonzero seed shuffles the
 * processing order.
 */
inline Construction flat_piece_hidden_sequence(const RoundedPolygon& body, const std::vector<FlatPiece>& pieces,
                                               std::uint64_t seed, double tol = kDefaultTol,
                                               double delta_floor = 1e-12) {
  if (pieces.empty()) throw Error("flat piece construction needs at least one piece");
  for (const auto& p : pieces)
    if (!verify_flat_piece(body, p, 50, tol)) throw Error("piece is not flat");
  for (std::size_t a = 0; a < pieces.size(); ++a)
    for (std::size_t b = a + 1; b < pieces.size(); ++b) check_separation(pieces[a], pieces[b]);
  std::vector<std::size_t> order(pieces.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  Construction out;
  out.trace.kind = "flat_piece";
  out.trace.seed = seed;
  std::vector<Point<double>> pts;
  for (std::size_t k : order) {
    const FlatPiece& f = pieces[k];
    std::size_t halvings = 0;
    bool accepted = false;
    for (double delta = f.eps * f.eps / 3.0; delta >= delta_floor; delta /= 2.0, ++halvings) {
      Point<double> p = f.center + delta * f.normal;
      if (contains(body, p, tol) != Membership::outside) continue;
      bool ok = true;
      for (const auto& q : pts)
        if (!segment_hits(body, q, p, SegmentMode::open_interior, tol)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pts.push_back(p);
      out.trace.steps.push_back({f.center, f.normal, delta, halvings});
      accepted = true;
      break;
    }
    if (!accepted) {
      Construction partial = out;
      partial.certificate = detail::certify(body, pts, tol);
      throw ConstructionStalled("construction stalled: delta halving exhausted", std::move(partial));
    }
  }
  out.certificate = detail::certify(body, pts, tol);
  return out;
}

/// Whether [x_p + delta y_p, x_q] meets the interior, for two separated flat pieces and 0 < delta <= eps_p^2 / 3.
inline bool claim4_check(const RoundedPolygon& body, const FlatPiece& p, const FlatPiece& q, double delta,
                         double tol = kDefaultTol) {
  check_separation(p, q);
  if (!(delta > 0.0) || delta > p.eps * p.eps / 3.0) throw Error("delta must satisfy 0 < delta <= eps^2 / 3");
  return segment_hits(body, p.center + delta * p.normal, q.center, SegmentMode::open_interior, tol);
}

}  // namespace hidden
