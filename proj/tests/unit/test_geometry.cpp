#include <gtest/gtest.h>

#include "support.hpp"

using namespace hidden;
using testing_support::Gen;

using Q = Rational;
using P = Point<Q>;

TEST(AffineHull, SinglePointIsZeroDimensional) {
  auto h = affine_hull(std::vector<P>{{0, 0}});
  EXPECT_EQ(h.dim(), 0u);
  EXPECT_EQ(h.base(), (P{0, 0}));
}

TEST(AffineHull, TwoPointsSpanALine) {
  auto h = affine_hull(std::vector<P>{{1, 0}, {0, 1}});
  ASSERT_EQ(h.dim(), 1u);
  EXPECT_EQ(h.directions()[0], (P{-1, 1}));
  EXPECT_TRUE(h.contains(P{Q(1, 2), Q(1, 2)}));
  EXPECT_TRUE(h.contains(P{3, -2}));
  EXPECT_FALSE(h.contains(P{0, 0}));
}

TEST(AffineHull, StandardBasisSpansThePlaneSumOne) {
  auto h = affine_hull(std::vector<P>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(h.dim(), 2u);
  EXPECT_TRUE(h.contains(P{Q(1, 3), Q(1, 3), Q(1, 3)}));
  EXPECT_TRUE(h.contains(P{2, -3, 2}));
  EXPECT_FALSE(h.contains(P{0, 0, 0}));
}

TEST(AffineHull, EmptyInputThrows) {
  EXPECT_THROW(affine_hull(std::vector<P>{}), Error);
}

TEST(AffineHull, MonotoneUnderUnion) {
  Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + g.index(4);
    std::vector<P> a, ab;
    const std::size_t na = 1 + g.index(3), nb = g.index(3);
    for (std::size_t i = 0; i < na; ++i) a.push_back(g.rational_point(d, 2, 4));
    ab = a;
    for (std::size_t i = 0; i < nb; ++i) ab.push_back(g.rational_point(d, 2, 4));
    auto ha = affine_hull(a), hab = affine_hull(ab);
    EXPECT_TRUE(hab.contains(ha.base()));
    for (const auto& v : ha.directions()) EXPECT_TRUE(hab.contains(ha.base() + v));
    EXPECT_LE(ha.dim(), hab.dim());
  }
}

TEST(ProjectOntoComplement, AxisProjection) {
  LinearSubspace<Q> s(2, {P{0, 1}});
  EXPECT_EQ(project_onto_complement(P{3, 5}, s), (P{3, 0}));
}

TEST(ProjectOntoComplement, ZeroSubspaceIsIdentity) {
  Gen g(3);
  auto s = LinearSubspace<double>::zero(3);
  auto p = g.point(3, -5, 5);
  EXPECT_EQ(project_onto_complement(p, s), p);
}

TEST(ProjectOntoComplement, DiagonalKillsDiagonal) {
  const double r = 1.0 / std::sqrt(2.0);
  LinearSubspace<double> s(2, {Point<double>{r, r}});
  auto out = project_onto_complement(Point<double>{1.0, 1.0}, s);
  EXPECT_NEAR(out[0], 0.0, 1e-12);
  EXPECT_NEAR(out[1], 0.0, 1e-12);
}

TEST(ProjectOntoComplement, IdempotentAndLinearExact) {
  Gen g(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + g.index(3);
    std::vector<P> basis;
    for (std::size_t k = 0; k < g.index(d); ++k) basis.push_back(g.rational_point(d, 3, 2));
    if (!basis.empty() && rank(Matrix<Q>::from_points(basis, d)) != basis.size()) continue;
    LinearSubspace<Q> s(d, basis);
    auto x = g.rational_point(d, 5, 3), y = g.rational_point(d, 5, 3);
    Q alpha = g.rational(3, 5), beta = g.rational(3, 5);
    auto px = project_onto_complement(x, s);
    EXPECT_EQ(project_onto_complement(px, s), px);
    EXPECT_EQ(project_onto_complement(alpha * x + beta * y, s), alpha * px + beta * project_onto_complement(y, s));
    for (const auto& b : basis) EXPECT_EQ(dot(px, b), Q(0));
  }
}

TEST(ProjectOntoComplement, IdempotentAndLinearFloat) {
  Gen g(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + g.index(3);
    std::vector<Point<double>> basis;
    for (std::size_t k = 0; k < g.index(d); ++k) basis.push_back(g.point(d, -3, 3));
    LinearSubspace<double> s(d, basis);
    auto x = g.point(d, -5, 5), y = g.point(d, -5, 5);
    const double alpha = g.uniform(-3, 3), beta = g.uniform(-3, 3);
    auto px = project_onto_complement(x, s);
    auto lhs = project_onto_complement(alpha * x + beta * y, s);
    auto rhs = alpha * px + beta * project_onto_complement(y, s);
    EXPECT_LT(norm(project_onto_complement(px, s) - px), 1e-9);
    EXPECT_LT(norm(lhs - rhs), 1e-9);
  }
}

// The rational kernel and the double kernel must agree on the same input.
TEST(ExactVersusFloat, RankNullSpaceAndProjectionAgree) {
  Gen g(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + g.index(4), cols = 1 + g.index(4);
    Matrix<Q> mq(rows, cols);
    Matrix<double> md(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        mq(i, j) = Q(g.integer(-10, 10));
        md(i, j) = to_double(mq(i, j));
      }
    ASSERT_EQ(rank(mq), rank(md));
    auto kq = null_space(mq);
    auto kd = null_space(md);
    ASSERT_EQ(kq.size(), kd.size());
    for (std::size_t k = 0; k < kq.size(); ++k)
      for (std::size_t j = 0; j < cols; ++j) EXPECT_NEAR(to_double(kq[k][j]), kd[k][j], 1e-9);
    if (!kq.empty()) {
      LinearSubspace<Q> sq(cols, kq);
      LinearSubspace<double> sd(cols, kd);
      auto x = g.rational_point(cols, 10, 1);
      auto pq = project_onto_complement(x, sq);
      auto pd = project_onto_complement(point_cast<double>(x), sd);
      for (std::size_t j = 0; j < cols; ++j) EXPECT_NEAR(to_double(pq[j]), pd[j], 1e-9);
    }
  }
}

TEST(Point, DimensionLimits) {
  EXPECT_THROW(Point<double>(std::vector<double>{}), Error);
  EXPECT_THROW(Point<double>(std::vector<double>(65, 0.0)), Error);
  EXPECT_NO_THROW(Point<double>(std::vector<double>(64, 0.0)));
  EXPECT_THROW((Point<double>{1.0, std::nan("")}), Error);
}

TEST(Scalar, DecimalParsingIsExact) {
  EXPECT_EQ(detail::parse_decimal("0.1"), Q(1, 10));
  EXPECT_EQ(detail::parse_decimal("-2.25"), Q(-9, 4));
  EXPECT_EQ(parse_rational("3/6"), Q(1, 2));
  EXPECT_EQ(rational_from_decimal_double(0.3), Q(3, 10));
}

TEST(Tolerance, ExactModeRejectsNonzeroTol) {
  EXPECT_THROW(check_tolerance<Q>(1e-9), Error);
  EXPECT_NO_THROW(check_tolerance<Q>(0.0));
  EXPECT_THROW(check_tolerance<double>(-1.0), Error);
}

TEST(Halton, RadicalInverse) {
  EXPECT_DOUBLE_EQ(radical_inverse(2, 1), 0.5);
  EXPECT_DOUBLE_EQ(radical_inverse(2, 3), 0.75);
  EXPECT_DOUBLE_EQ(radical_inverse(3, 1), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(radical_inverse(3, 5), 7.0 / 9.0);
}

TEST(Halton, DirectionsAreUnitAndReproducible) {
  for (std::size_t d : {1u, 2u, 3u, 5u}) {
    DirectionStream a(d, 9), b(d, 9), c(d, 10);
    bool differs = false;
    for (std::uint64_t i = 0; i < 50; ++i) {
      EXPECT_NEAR(norm(a(i)), 1.0, 1e-12);
      EXPECT_EQ(a(i), b(i));
      if (!(a(i) == c(i))) differs = true;
    }
    EXPECT_TRUE(differs) << "seed has no effect in d=" << d;
  }
}

TEST(Clique, ExactMatchesBruteForce) {
  Gen g(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + g.index(14);
    Graph gr(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (g.uniform(0, 1) < 0.6) gr.add_edge(i, j);
    std::size_t brute = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> vs;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) vs.push_back(i);
      if (vs.size() > brute && gr.is_clique(vs)) brute = vs.size();
    }
    auto best = max_clique_exact(gr);
    EXPECT_EQ(best.size(), brute);
    EXPECT_TRUE(gr.is_clique(best));
    auto greedy = max_clique_greedy(gr);
    EXPECT_TRUE(gr.is_clique(greedy));
    EXPECT_LE(greedy.size(), brute);
  }
}

TEST(Parallel, CoversEveryIndexOnceAndRethrows) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) { if (i == 7) throw Error("boom"); }), Error);
}
