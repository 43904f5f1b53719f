#pragma once

#include <vector>

#include "hidden/body.hpp"
#include "hidden/clique.hpp"
#include "hidden/hidden_set.hpp"
#include "hidden/parallel.hpp"
#include "hidden/reduction.hpp"

namespace hidden {

struct SearchOptions {
  std::size_t exact_limit = 64;
  unsigned threads = 1;
  SegmentMode mode = SegmentMode::closed;
  std::optional<double> tol;  // defaults to the scalar type's tolerance
};

/// Edge {i, j} exactly when the segment between candidates i and j meets the body.
template <class Body, Scalar T>
Graph hiding_graph(const Body& body, const std::vector<Point<T>>& candidates, SegmentMode mode, double tol,
                   unsigned threads = 1) {
  const std::size_t n = candidates.size();
  std::vector<std::vector<char>> rows(n);
  parallel_for(n, threads, [&](std::size_t i) {
    rows[i].assign(n, 0);
    for (std::size_t j = i + 1; j < n; ++j)
      rows[i][j] = segment_hits(body, candidates[i], candidates[j], mode, tol) ? 1 : 0;
  });
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows[i][j]) g.add_edge(i, j);
  return g;
}

/**
 * Largest hidden subset of the candidates: a maximum clique of the hiding
 * graph, exact up to options.exact_limit candidates and greedy with local
 * swaps beyond. The returned certificate lists the chosen points in
 * candidate order.
 */
template <class Body, Scalar T>
HiddenSetCertificate<T> max_hidden_subset(const Body& body, const std::vector<Point<T>>& candidates,
                                          const SearchOptions& options = {}) {
  const double tol = options.tol.value_or(default_tol<T>());
  check_tolerance<T>(tol);
  if (candidates.size() > 10000) throw Error("at most 10000 candidates are supported");
  require_outside(body, candidates, tol);
  HiddenSetCertificate<T> cert;
  cert.mode = options.mode;
  if (candidates.empty()) return cert;
  Graph g = hiding_graph(body, candidates, options.mode, tol, options.threads);
  auto clique = candidates.size() <= options.exact_limit ? max_clique_exact(g) : max_clique_greedy(g);
  for (std::size_t v : clique) cert.points.push_back(candidates[v]);
  if (cert.points.size() < 2) return cert;
  auto verdict = is_hidden(body, cert.points, options.mode, tol);
  if (auto* c = std::get_if<HiddenSetCertificate<T>>(&verdict)) return std::move(*c);
  throw Error("internal error: clique failed re-verification");
}

/// Pigeonhole bound: at most in_aff hidden points inside aff(C), at most two outside.
struct CapacityBound {
  std::size_t in_aff = 0;
  std::size_t total = 0;
  std::size_t affine_dim = 0;
  std::size_t ambient_dim = 0;
};

template <Scalar T>
CapacityBound capacity_upper_bound(const HPolytope<T>& p) {
  p.require_nonempty();
  if (lineality_space(p).dim() > 0) throw Error("nontrivial lineality space: take the quotient first");
  auto dec = polyhedric_decompose(p);
  CapacityBound out;
  out.in_aff = dec.halves.size();
  out.affine_dim = dec.ambient.dim();
  out.ambient_dim = p.dim();
  out.total = out.in_aff + (out.affine_dim < out.ambient_dim ? 2 : 0);
  return out;
}

/// Floating-point input is converted exactly (binary fractions) so the facet LPs run in rationals.
inline CapacityBound capacity_upper_bound(const HPolytope<double>& p) {
  std::vector<Rational> b;
  for (double v : p.b()) b.push_back(from_double<Rational>(v));
  return capacity_upper_bound(HPolytope<Rational>(matrix_cast<Rational>(p.a()), std::move(b)));
}

inline CapacityBound capacity_upper_bound(const SimplexBody& s) {
  return capacity_upper_bound(s.as_hpolytope<Rational>());
}

}  // namespace hidden
