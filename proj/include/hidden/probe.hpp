#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "hidden/capacity.hpp"
#include "hidden/constructors.hpp"
#include "hidden/halton.hpp"

namespace hidden {

struct CurveRow {
  std::size_t size = 0;
  bool found = false;
  double wall_ms = 0.0;
};

struct CapacityReport {
  std::string body_kind;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::optional<CapacityBound> upper_bound;
  bool unbounded_evidence = false;
  HiddenSetCertificate<double> best_found;
  std::string method;  // "facet-pigeonhole", "clique-exact" or "randomized-probe"
  std::size_t budget_used = 0;
  std::string verdict;
  std::vector<CurveRow> curve;
};

struct ProbeOptions {
  unsigned threads = 1;
  double tol = kDefaultTol;
  std::size_t halton_candidates = 32;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Outside candidates for a polyhedral body: facet centres pushed out along the
// in-hull normal, points off the affine hull on both sides, and pushed-out
// boundary points in low-discrepancy directions.
template <class Body>
std::vector<Point<double>> polyhedral_candidates(const Body& body, const std::optional<PolyhedricDecomposition<double>>& dec,
                                                 std::uint64_t seed, const ProbeOptions& opt) {
  const std::size_t d = dim_of(body);
  const double scale = circumradius_estimate(ConvexBody(body));
  std::vector<Point<double>> out;
  if (dec) {
    for (const auto& h : dec->halves) {
      if (norm(h.normal) < 1e-12) continue;
      Point<double> f = boundary_point_in_direction(body, h.normal);
      Point<double> n = normalized(h.normal);
      for (double s : {0.05, 0.5}) out.push_back(f + (s * scale) * n);
    }
    std::vector<Point<double>> dirs = dec->ambient.directions();
    auto normals = null_space(Matrix<double>::from_points(dirs.empty() ? std::vector<Point<double>>{Point<double>::zero(d)} : dirs, d));
    auto onb = orthonormal_basis(normals);
    for (const auto& nu : onb)
      for (double s : {0.5, -0.5}) out.push_back(dec->ambient.base() + (s * scale) * nu);
  }
  if constexpr (std::is_same_v<Body, VPolytope<double>>) {
    // Without facets, edge midpoints stand in for facet centres.
    const auto& vs = body.vertices();
    const std::size_t nv = std::min<std::size_t>(vs.size(), 24);
    for (std::size_t a = 0; a < nv; ++a)
      for (std::size_t b = a + 1; b < nv; ++b) {
        Point<double> m = 0.5 * (vs[a] + vs[b]);
        if (contains(body, m, opt.tol) != Membership::boundary) continue;
        Point<double> y = support_functional(body, m, opt.tol).normal;
        out.push_back(m + (0.05 * scale) * y);
      }
  }
  DirectionStream stream(d, seed);
  for (std::size_t i = 0; i < opt.halton_candidates; ++i) {
    try {
      Point<double> x = boundary_point_in_direction(body, stream(i));
      Point<double> y = support_functional(body, x, opt.tol).normal;
      out.push_back(x + (0.1 * scale) * y);
    } catch (const Error&) {
      // unbounded in this direction
    }
  }
  std::vector<Point<double>> kept;
  for (auto& p : out)
    if (contains(body, p, opt.tol) == Membership::outside &&
        std::find(kept.begin(), kept.end(), p) == kept.end())
      kept.push_back(std::move(p));
  return kept;
}

inline void fill_curve(CapacityReport& r, double wall_ms) {
  for (std::size_t k = 2; k <= r.budget; ++k) r.curve.push_back({k, r.best_found.size() >= k, wall_ms});
}

inline void cap_at_budget(HiddenSetCertificate<double>& cert, std::size_t budget) {
  if (cert.size() <= budget) return;
  std::vector<std::size_t> idx(budget);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  cert = restrict_certificate(cert, idx);
}

template <class Body>
CapacityReport probe_polyhedral(const Body& body, std::optional<CapacityBound> bound,
                                const std::optional<PolyhedricDecomposition<double>>& dec, CapacityReport r,
                                const ProbeOptions& opt) {
  auto cands = polyhedral_candidates(body, dec, r.seed, opt);
  SearchOptions so;
  so.exact_limit = std::max<std::size_t>(64, cands.size());
  so.threads = opt.threads;
  so.tol = opt.tol;
  r.best_found = max_hidden_subset(body, cands, so);
  cap_at_budget(r.best_found, r.budget);
  r.upper_bound = bound;
  r.method = "clique-exact";
  r.budget_used = r.budget;
  return r;
}

}  // namespace detail

/**
 * Tries to certify hidden sets of every size from 2 up to the budget.
 * Polyhedral bodies get the pigeonhole bound and an exact clique search over
 * structured candidates; everything else goes through the smooth-boundary
 * construction. Growth all the way to the budget on a body without an integer
 * bound is reported as non-polyhedral evidence at that level.
 */
inline CapacityReport polyhedrality_probe(const ConvexBody& body, std::size_t budget, std::uint64_t seed,
                                          const ProbeOptions& opt = {}) {
  if (budget < 2) throw Error("budget too small");
  const auto t0 = detail::Clock::now();
  CapacityReport r;
  r.body_kind = std::string(kind_name(body));
  r.budget = budget;
  r.seed = seed;
  bool stalled = false;
  const bool polytope = !std::holds_alternative<SmoothBody>(body) && !std::holds_alternative<RoundedPolygon>(body) &&
                        !std::holds_alternative<OracleBody>(body);

  if (const auto* h = std::get_if<HPolytope<double>>(&body)) {
    h->require_nonempty();
    if (lineality_space(*h).dim() > 0) {
      // Hidden sets of C and of its quotient D correspond through Q and the lift u -> R^T u.
      auto q = quotient_body(*h);
      auto bound = capacity_upper_bound(q.body);
      r = detail::probe_polyhedral(q.body, bound, polyhedric_decompose(q.body), r, opt);
      std::vector<Point<double>> lifted;
      for (const auto& u : r.best_found.points) lifted.push_back(q.map.m.transpose() * u);
      if (lifted.size() >= 2) {
        auto v = is_hidden(*h, lifted, SegmentMode::closed, opt.tol);
        r.best_found = std::get<HiddenSetCertificate<double>>(v);
      } else {
        r.best_found.points = lifted;
      }
    } else {
      r = detail::probe_polyhedral(*h, capacity_upper_bound(*h), polyhedric_decompose(*h), r, opt);
    }
  } else if (const auto* s = std::get_if<SimplexBody>(&body)) {
    auto hp = s->as_hpolytope<double>();
    r = detail::probe_polyhedral(hp, capacity_upper_bound(*s), polyhedric_decompose(hp), r, opt);
  } else if (const auto* v = std::get_if<VPolytope<double>>(&body)) {
    r = detail::probe_polyhedral(*v, std::nullopt, std::nullopt, r, opt);
  } else {
    std::vector<double> accept_ms;
    SmoothOptions so;
    so.tol = opt.tol;
    so.on_accept = [&](std::size_t) { accept_ms.push_back(detail::elapsed_ms(t0)); };
    try {
      r.best_found = smooth_hidden_sequence(body, budget, seed, so).certificate;
    } catch (const ConstructionStalled& e) {
      r.best_found = e.partial().certificate;
      stalled = true;
    }
    r.method = "randomized-probe";
    r.budget_used = std::min(budget, r.best_found.size() + (stalled ? 1 : 0));
    for (std::size_t k = 2; k <= budget; ++k) {
      bool found = r.best_found.size() >= k;
      r.curve.push_back({k, found, found ? accept_ms[k - 1] : detail::elapsed_ms(t0)});
    }
  }
  if (r.curve.empty()) detail::fill_curve(r, detail::elapsed_ms(t0));

  // A polytope is polyhedral whatever the search found; only smooth-type bodies can give evidence.
  if (r.upper_bound || polytope) {
    r.verdict = "consistent-with-polyhedral";
  } else if (r.best_found.size() >= budget) {
    r.unbounded_evidence = true;
    r.method = "randomized-probe";
    r.verdict = "non-polyhedral evidence at level = " + std::to_string(budget);
  } else if (stalled) {
    r.verdict = "inconclusive: construction stalled at size " + std::to_string(r.best_found.size());
  } else {
    r.verdict = "consistent-with-polyhedral";
  }
  return r;
}

}  // namespace hidden
