#include <gtest/gtest.h>

#include <numbers>

#include "support.hpp"

using namespace hidden;
using testing_support::Gen;

using Q = Rational;

namespace {

std::vector<Point<double>> on_circle(std::size_t n, double r, double phase = 0.0) {
  std::vector<Point<double>> out;
  for (std::size_t k = 0; k < n; ++k) {
    double a = phase + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    out.push_back(Point<double>{r * std::cos(a), r * std::sin(a)});
  }
  return out;
}

// A point strictly beyond one facet of the polytope: a relative-interior
// point of the facet pushed outward along the facet normal.
Point<Q> beyond_facet(const HPolytope<Q>& p, std::size_t row, Gen& g) {
  const std::size_t d = p.dim();
  Point<Q> x = interior_point(p);
  Point<Q> n = p.a().row_point(row);
  // Move toward the facet plane, then a little past it.
  Q over = (p.b()[row] - dot(n, x)) / dot(n, n);
  Point<Q> jitter = g.rational_point(d, 1, 8);
  return x + (over * Q(8 + g.integer(1, 4), 8) + Q(1, 10)) * n + Q(1, 10) * jitter;
}

// Kuhn's augmenting-path matching of hidden points to facets they violate.
bool has_injective_assignment(const std::vector<std::vector<std::size_t>>& options, std::size_t facets) {
  std::vector<long> owner(facets, -1);
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t v, std::vector<char>& seen) {
    for (std::size_t f : options[v]) {
      if (seen[f]) continue;
      seen[f] = 1;
      if (owner[f] < 0 || augment(static_cast<std::size_t>(owner[f]), seen)) {
        owner[f] = static_cast<long>(v);
        return true;
      }
    }
    return false;
  };
  for (std::size_t v = 0; v < options.size(); ++v) {
    std::vector<char> seen(facets, 0);
    if (!augment(v, seen)) return false;
  }
  return true;
}

}  // namespace

// --- is_hidden -----------------------------------------------------------------

TEST(IsHidden, ThreePointsAroundTheDisk) {
  auto disk = SmoothBody::ball(Point<double>{0.0, 0.0}, 1.0);
  auto v = is_hidden(disk, on_circle(3, 1.05));
  ASSERT_TRUE(std::holds_alternative<HiddenSetCertificate<double>>(v));
  const auto& cert = std::get<HiddenSetCertificate<double>>(v);
  EXPECT_EQ(cert.witnesses.size(), 3u);
  EXPECT_TRUE(verify_certificate(disk, cert));
}

TEST(IsHidden, FourFacetPointsOfTheSquare) {
  auto sq = testing_support::exact_square();
  std::vector<Point<Q>> pts = {{Q(11, 10), Q(0)}, {Q(-11, 10), Q(0)}, {Q(0), Q(11, 10)}, {Q(0), Q(-11, 10)}};
  auto v = is_hidden(sq, pts, SegmentMode::closed, 0.0);
  ASSERT_TRUE(std::holds_alternative<HiddenSetCertificate<Q>>(v));
  EXPECT_TRUE(verify_certificate(sq, std::get<HiddenSetCertificate<Q>>(v), 0.0));
}

TEST(IsHidden, SameFacetPairFails) {
  auto sq = testing_support::exact_square();
  std::vector<Point<Q>> pts = {{Q(11, 10), Q(1, 2)}, {Q(11, 10), Q(-1, 2)}};
  auto v = is_hidden(sq, pts, SegmentMode::closed, 0.0);
  ASSERT_TRUE(std::holds_alternative<FailingPair<Q>>(v));
  const auto& f = std::get<FailingPair<Q>>(v);
  EXPECT_EQ(f.i, 0u);
  EXPECT_EQ(f.j, 1u);
  ASSERT_TRUE(f.separator);
  for (const auto& p : pts) EXPECT_GT(f.separator->value(p), f.separator->offset);
}

TEST(IsHidden, DuplicatePointsFormAFailingPair) {
  auto sq = testing_support::exact_square();
  std::vector<Point<Q>> pts = {{Q(2), Q(0)}, {Q(2), Q(0)}};
  EXPECT_TRUE(std::holds_alternative<FailingPair<Q>>(is_hidden(sq, pts, SegmentMode::closed, 0.0)));
}

TEST(IsHidden, Preconditions) {
  auto sq = testing_support::exact_square();
  EXPECT_THROW(is_hidden(sq, std::vector<Point<Q>>{{Q(2), Q(0)}}, SegmentMode::closed, 0.0), Error);
  EXPECT_THROW(is_hidden(sq, std::vector<Point<Q>>{{Q(2), Q(0)}, {Q(0), Q(0)}}, SegmentMode::closed, 0.0), Error);
  EXPECT_THROW(is_hidden(sq, std::vector<Point<Q>>{{Q(2), Q(0)}, {Q(0), Q(2)}}, SegmentMode::closed, 1e-9), Error);
}

TEST(IsHidden, OpenModeIsStricter) {
  // Segment between these two touches the square only at the corner (1, 1).
  auto sq = testing_support::exact_square();
  std::vector<Point<Q>> pts = {{Q(2), Q(0)}, {Q(0), Q(2)}};
  EXPECT_TRUE(std::holds_alternative<HiddenSetCertificate<Q>>(is_hidden(sq, pts, SegmentMode::closed, 0.0)));
  EXPECT_TRUE(std::holds_alternative<FailingPair<Q>>(is_hidden(sq, pts, SegmentMode::open_interior, 0.0)));
}

TEST(VerifyCertificate, RejectsTamperedWitnesses) {
  auto disk = SmoothBody::ball(Point<double>{0.0, 0.0}, 1.0);
  auto cert = std::get<HiddenSetCertificate<double>>(is_hidden(disk, on_circle(5, 1.1)));
  ASSERT_TRUE(verify_certificate(disk, cert));
  auto bad = cert;
  bad.witnesses[2].point = bad.witnesses[2].point + Point<double>{1e-3, 0.0};
  EXPECT_FALSE(verify_certificate(disk, bad));
  bad = cert;
  bad.witnesses.pop_back();
  EXPECT_FALSE(verify_certificate(disk, bad));
  bad = cert;
  bad.points[0] = Point<double>{0.5, 0.0};
  EXPECT_FALSE(verify_certificate(disk, bad));
}

TEST(IsHidden, SubsetsOfCertifiedSetsAreHidden) {
  Gen g(31);
  auto disk = SmoothBody::ball(Point<double>{0.0, 0.0}, 1.0);
  auto cert = std::get<HiddenSetCertificate<double>>(is_hidden(disk, on_circle(12, 1.01, 0.3)));
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < cert.size(); ++k)
      if (g.uniform(0, 1) < 0.5) idx.push_back(k);
    if (idx.size() < 2) continue;
    auto sub = restrict_certificate(cert, idx);
    EXPECT_TRUE(verify_certificate(disk, sub));
    EXPECT_TRUE(std::holds_alternative<HiddenSetCertificate<double>>(is_hidden(disk, sub.points)));
  }
}

// Hiding is invariant under invertible affine maps applied to body and points.
TEST(IsHidden, AffineInvarianceExact) {
  Gen g(41);
  int hidden_count = 0, failing_count = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + g.index(3);
    auto box = HPolytope<Q>::box(d, Q(1));
    Matrix<Q> m(d, d);
    do {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = Q(g.integer(-3, 3));
    } while (rank(m) != d);
    AffineMap<Q> t(m, g.rational_point(d, 2, 3));
    // T(C) = {y : A M^-1 (y - s) <= b}, built as a pullback along T^-1.
    Matrix<Q> inv(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Q> e(d, Q(0));
      e[j] = 1;
      auto col = *solve(m, e);
      for (std::size_t i = 0; i < d; ++i) inv(i, j) = col[i];
    }
    AffineMap<Q> t_inv(inv, -(inv * t.s));
    auto image = pullback_polytope(box, t_inv);

    std::vector<Point<Q>> pts;
    for (std::size_t k = 0; k < 2 + g.index(4); ++k) pts.push_back(beyond_facet(box, g.index(box.rows()), g));
    bool distinct = true;
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b) distinct = distinct && !(pts[a] == pts[b]);
    if (!distinct) continue;
    std::vector<Point<Q>> mapped;
    for (const auto& p : pts) mapped.push_back(t.apply(p));

    auto before = is_hidden(box, pts, SegmentMode::closed, 0.0);
    auto after = is_hidden(image, mapped, SegmentMode::closed, 0.0);
    ASSERT_EQ(before.index(), after.index());
    if (before.index() == 0) {
      ++hidden_count;
      EXPECT_TRUE(verify_certificate(image, std::get<0>(after), 0.0));
    } else {
      ++failing_count;
      EXPECT_EQ(std::get<1>(before).i, std::get<1>(after).i);
      EXPECT_EQ(std::get<1>(before).j, std::get<1>(after).j);
    }
  }
  EXPECT_GT(hidden_count, 0);
  EXPECT_GT(failing_count, 0);
}

// --- max_hidden_subset --------------------------------------------------------

TEST(MaxHiddenSubset, SquareWithAnExtraCandidate) {
  auto sq = testing_support::exact_square();
  std::vector<Point<Q>> cands = {{Q(11, 10), Q(0)}, {Q(-11, 10), Q(0)}, {Q(0), Q(11, 10)},
                                 {Q(0), Q(-11, 10)}, {Q(6, 5), Q(9, 10)}};
  SearchOptions opt;
  opt.tol = 0.0;
  auto best = max_hidden_subset(sq, cands, opt);
  EXPECT_EQ(best.size(), 4u);
  EXPECT_TRUE(verify_certificate(sq, best, 0.0));
  // Oracle: brute force over all 2^5 subsets.
  std::size_t brute = 0;
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<Point<Q>> sub;
    for (std::size_t k = 0; k < 5; ++k)
      if (mask >> k & 1u) sub.push_back(cands[k]);
    if (sub.size() < 2) {
      brute = std::max(brute, sub.size());
      continue;
    }
    if (std::holds_alternative<HiddenSetCertificate<Q>>(is_hidden(sq, sub, SegmentMode::closed, 0.0)))
      brute = std::max(brute, sub.size());
  }
  EXPECT_EQ(brute, 4u);
}

TEST(MaxHiddenSubset, TwelvePointsAroundTheDisk) {
  auto disk = SmoothBody::ball(Point<double>{0.0, 0.0}, 1.0);
  auto best = max_hidden_subset(disk, on_circle(12, 1.01));
  EXPECT_EQ(best.size(), 12u);
  EXPECT_TRUE(verify_certificate(disk, best));
}

TEST(MaxHiddenSubset, SingletonAndEmpty) {
  auto sq = testing_support::square();
  auto one = max_hidden_subset(sq, std::vector<Point<double>>{{3.0, 0.0}});
  EXPECT_EQ(one.size(), 1u);
  EXPECT_TRUE(one.witnesses.empty());
  EXPECT_EQ(max_hidden_subset(sq, std::vector<Point<double>>{}).size(), 0u);
}

TEST(MaxHiddenSubset, ThreadCountDoesNotChangeTheAnswer) {
  Gen g(51);
  auto disk = SmoothBody::ball(Point<double>{0.0, 0.0}, 1.0);
  std::vector<Point<double>> cands;
  for (int k = 0; k < 40; ++k) cands.push_back(g.uniform(1.01, 1.4) * g.unit(2));
  SearchOptions one, four;
  four.threads = 4;
  auto a = max_hidden_subset(disk, cands, one), b = max_hidden_subset(disk, cands, four);
  EXPECT_EQ(a.points, b.points);
}

// Pigeonhole: every hidden point violates some facet, and no facet can be
// violated by two of them, so the hidden set injects into the facets.
TEST(MaxHiddenSubset, PigeonholeWithInjectiveFacetAssignment) {
  Gen g(61);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t d = 2 + g.index(3);
    const std::size_t m = d + 1 + g.index(8 - d);
    Matrix<Q> a(m, d);
    std::vector<Q> b(m);
    for (std::size_t i = 0; i < m; ++i) {
      do {
        for (std::size_t j = 0; j < d; ++j) a(i, j) = Q(g.integer(-3, 3));
      } while (a.row_point(i) == Point<Q>::zero(d));
      b[i] = Q(g.integer(1, 4));
    }
    HPolytope<Q> p(a, b);
    std::vector<Point<Q>> cands;
    while (cands.size() < 200) {
      auto x = g.rational_point(d, 4, 10);
      if (contains(p, x, 0.0) == Membership::outside) cands.push_back(x);
    }
    SearchOptions opt;
    opt.tol = 0.0;
    auto best = max_hidden_subset(p, cands, opt);
    ASSERT_LE(best.size(), m);
    std::vector<std::vector<std::size_t>> violated;
    for (const auto& x : best.points) {
      violated.emplace_back();
      for (std::size_t i = 0; i < m; ++i)
        if (p.slack(i, x) < 0) violated.back().push_back(i);
    }
    EXPECT_TRUE(has_injective_assignment(violated, m));
  }
}

TEST(HidingGraph, SameFacetCandidatesAreNeverAdjacent) {
  Gen g(71);
  auto box = HPolytope<Q>::box(3, Q(1));
  std::vector<Point<Q>> cands;
  for (int k = 0; k < 60; ++k) cands.push_back(beyond_facet(box, g.index(box.rows()), g));
  auto graph = hiding_graph(box, cands, SegmentMode::closed, 0.0);
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      for (std::size_t r = 0; r < box.rows(); ++r)
        if (box.slack(r, cands[i]) < 0 && box.slack(r, cands[j]) < 0) {
          EXPECT_FALSE(graph.has_edge(i, j));
        }
}

// --- capacity bounds ------------------------------------------------------------

TEST(CapacityBound, Examples) {
  auto sq = capacity_upper_bound(testing_support::exact_square());
  EXPECT_EQ(sq.in_aff, 4u);
  EXPECT_EQ(sq.total, 4u);
  auto s3 = capacity_upper_bound(SimplexBody(3));
  EXPECT_EQ(s3.in_aff, 3u);
  EXPECT_EQ(s3.total, 5u);
  EXPECT_EQ(s3.affine_dim, 2u);
  HPolytope<Q> tri(Matrix<Q>{{Q(-1), Q(0)}, {Q(0), Q(-1)}, {Q(1), Q(1)}}, {Q(0), Q(0), Q(1)});
  auto t = capacity_upper_bound(tri);
  EXPECT_EQ(t.in_aff, 3u);
  EXPECT_EQ(t.total, 3u);
}

TEST(CapacityBound, RedundantRowsDoNotCount) {
  HPolytope<Q> sq(Matrix<Q>{{Q(1), Q(0)}, {Q(-1), Q(0)}, {Q(0), Q(1)}, {Q(0), Q(-1)}, {Q(1), Q(1)}, {Q(2), Q(0)}},
                  {Q(1), Q(1), Q(1), Q(1), Q(5), Q(2)});
  EXPECT_EQ(capacity_upper_bound(sq).in_aff, 4u);
}

TEST(CapacityBound, RejectsLineality) {
  HPolytope<Q> slab(Matrix<Q>{{Q(1), Q(0)}, {Q(-1), Q(0)}}, {Q(1), Q(1)});
  EXPECT_THROW(capacity_upper_bound(slab), Error);
}

// Dense grid around the square: no 5 points are hidden.
TEST(CapacityBound, SquareGridNeverBeatsFour) {
  std::vector<Point<Q>> grid;
  for (int i = -6; i <= 6; ++i)
    for (int j = -6; j <= 6; ++j) {
      Point<Q> x{Q(i, 4), Q(j, 4)};
      if (std::abs(i) > 4 || std::abs(j) > 4) grid.push_back(x);
    }
  SearchOptions opt;
  opt.tol = 0.0;
  opt.exact_limit = grid.size();
  EXPECT_EQ(max_hidden_subset(testing_support::exact_square(), grid, opt).size(), 4u);
}

// --- probe -------------------------------------------------------------------

TEST(Probe, DiskGrowsToTheBudget) {
  auto r = polyhedrality_probe(SmoothBody::ball(Point<double>{0.0, 0.0}, 1.0), 10, 42);
  EXPECT_EQ(r.best_found.size(), 10u);
  EXPECT_TRUE(r.unbounded_evidence);
  EXPECT_EQ(r.verdict, "non-polyhedral evidence at level = 10");
  EXPECT_FALSE(r.upper_bound);
  EXPECT_TRUE(verify_certificate(SmoothBody::ball(Point<double>{0.0, 0.0}, 1.0), r.best_found));
}

TEST(Probe, SquareSaturatesAtFour) {
  auto r = polyhedrality_probe(testing_support::square(), 10, 0);
  EXPECT_EQ(r.best_found.size(), 4u);
  ASSERT_TRUE(r.upper_bound);
  EXPECT_EQ(r.upper_bound->total, 4u);
  EXPECT_EQ(r.verdict, "consistent-with-polyhedral");
  ASSERT_EQ(r.curve.size(), 9u);
  EXPECT_TRUE(r.curve[2].found);
  EXPECT_FALSE(r.curve[3].found);
}

TEST(Probe, SimplexSegment) {
  auto r = polyhedrality_probe(SimplexBody(2), 5, 0);
  ASSERT_TRUE(r.upper_bound);
  EXPECT_EQ(r.upper_bound->in_aff, 2u);
  EXPECT_EQ(r.upper_bound->total, 4u);
  EXPECT_LE(r.best_found.size(), 4u);
  EXPECT_GE(r.best_found.size(), 2u);
}

TEST(Probe, SlabGoesThroughTheQuotient) {
  HPolytope<double> slab(Matrix<double>{{1.0, 1.0, 0.0}, {-1.0, -1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}},
                         {1.0, 1.0, 1.0, 1.0});
  auto r = polyhedrality_probe(slab, 6, 3);
  ASSERT_TRUE(r.upper_bound);
  EXPECT_EQ(r.upper_bound->total, 4u);
  EXPECT_GE(r.best_found.size(), 2u);
  EXPECT_LE(r.best_found.size(), 4u);
  EXPECT_TRUE(verify_certificate(slab, r.best_found));
}

TEST(Probe, PolytopeReachingASmallBudgetIsNotEvidence) {
  auto r = polyhedrality_probe(VPolytope<double>({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}), 3, 0);
  EXPECT_EQ(r.best_found.size(), 3u);
  EXPECT_FALSE(r.unbounded_evidence);
  EXPECT_EQ(r.verdict, "consistent-with-polyhedral");
}

TEST(Probe, BudgetTooSmall) {
  EXPECT_THROW(polyhedrality_probe(testing_support::square(), 1, 0), Error);
}

TEST(Probe, JsonIsThreadIndependent) {
  ProbeOptions one, four;
  four.threads = 4;
  for (const ConvexBody& b : std::vector<ConvexBody>{testing_support::square(),
                                                      SmoothBody::ball(Point<double>{0.0, 0.0}, 1.0)}) {
    auto a = report_to_json(polyhedrality_probe(b, 8, 5, one)).dump(2);
    auto c = report_to_json(polyhedrality_probe(b, 8, 5, four)).dump(2);
    EXPECT_EQ(a, c);
  }
}

// --- JSON round trips --------------------------------------------------------------

TEST(Json, CertificateRoundTripExact) {
  auto sq = testing_support::exact_square();
  std::vector<Point<Q>> pts = {{Q(11, 10), Q(0)}, {Q(-11, 10), Q(1, 3)}};
  auto cert = std::get<HiddenSetCertificate<Q>>(is_hidden(sq, pts, SegmentMode::closed, 0.0));
  auto back = certificate_from_json<Q>(Json::parse(certificate_to_json(cert).dump()));
  EXPECT_EQ(back.points, cert.points);
  ASSERT_EQ(back.witnesses.size(), 1u);
  EXPECT_EQ(back.witnesses[0].t, cert.witnesses[0].t);
  EXPECT_TRUE(verify_certificate(sq, back, 0.0));
}

TEST(Json, BodiesParse) {
  EXPECT_EQ(kind_name(body_from_json(Json::parse(R"({"type":"ball","center":[0,0],"radius":2})"))), "ball");
  EXPECT_EQ(dim(body_from_json(Json::parse(R"({"type":"simplex","dim":4})"))), 4u);
  EXPECT_THROW(body_from_json(Json::parse(R"({"type":"torus"})")), Error);
  EXPECT_THROW(exact_body_from_json(Json::parse(R"({"type":"ball","center":[0],"radius":1})")), Error);
  auto exact = exact_body_from_json(Json::parse(R"({"type":"hpolytope","A":[[1],[-1]],"b":["1/3","0.25"]})"));
  const auto& h = std::get<HPolytope<Q>>(exact);
  EXPECT_EQ(h.b()[0], Q(1, 3));
  EXPECT_EQ(h.b()[1], Q(1, 4));
}
