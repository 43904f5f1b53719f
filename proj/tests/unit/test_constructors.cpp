#include <gtest/gtest.h>

#include <numbers>

#include "support.hpp"

using namespace hidden;
using testing_support::Gen;

namespace {

SmoothBody unit_disk() { return SmoothBody::ball(Point<double>{0.0, 0.0}, 1.0); }

SmoothBody ellipse41() {
  // x^2 / 4 + y^2 <= 1
  return SmoothBody::ellipsoid(Point<double>{0.0, 0.0}, Matrix<double>{{0.25, 0.0}, {0.0, 1.0}});
}

RoundedPolygon rounded_square(double r) {
  return RoundedPolygon({{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}}, r);
}

std::vector<FlatPiece> edge_center_pieces(const RoundedPolygon& body, double eps) {
  std::vector<FlatPiece> out;
  for (std::size_t k = 0; k < body.edge_count(); ++k) {
    auto [p, q] = body.edge(k);
    auto n = body.edge_normal(k);
    out.push_back({0.5 * (p + q) + body.radius() * n, n, eps});
  }
  return out;
}

}  // namespace

// --- disk_hidden_points ------------------------------------------------------

TEST(DiskHiddenPoints, RadiusRange) {
  EXPECT_NO_THROW(disk_hidden_points(3, 1.5));
  EXPECT_THROW(disk_hidden_points(3, 2.0), Error);
  EXPECT_THROW(disk_hidden_points(4, 1.5), Error);
  EXPECT_NO_THROW(disk_hidden_points(4, 1.41));
  EXPECT_THROW(disk_hidden_points(4, 1.0), Error);
  EXPECT_THROW(disk_hidden_points(1, 1.5), Error);
}

TEST(DiskHiddenPoints, AdjacentChordDistance) {
  for (std::size_t n = 3; n <= 24; ++n) {
    const double r = 0.5 * (1.0 + 1.0 / std::cos(std::numbers::pi / static_cast<double>(n)));
    auto pts = disk_hidden_points(n, r);
    ASSERT_EQ(pts.size(), n);
    // Oracle: the adjacent chord passes at distance R cos(pi / n) from the centre.
    Point<double> mid = 0.5 * (pts[0] + pts[1]);
    EXPECT_NEAR(norm(mid), r * std::cos(std::numbers::pi / static_cast<double>(n)), 1e-12);
    EXPECT_LT(norm(mid), 1.0);
    auto v = is_hidden(unit_disk(), pts);
    ASSERT_TRUE(std::holds_alternative<HiddenSetCertificate<double>>(v)) << n;
  }
}

// --- lambda_contains -----------------------------------------------------------

TEST(LambdaContains, Examples) {
  auto disk = unit_disk();
  EXPECT_TRUE(lambda_contains(disk, Point<double>{0.0, 1.0}, 0.1, Point<double>{0.0, -1.0}));
  EXPECT_FALSE(lambda_contains(disk, Point<double>{0.0, 1.0}, 0.1, Point<double>{0.05, 1.001}));
  EXPECT_THROW(lambda_contains(disk, Point<double>{0.0, 1.0}, 0.0, Point<double>{0.0, -1.0}), Error);
}

TEST(LambdaContains, ShrinkingEpsilonOnlyGrowsTheSet) {
  Gen g(81);
  for (const auto& body : {unit_disk(), ellipse41()}) {
    int premises = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto x = boundary_point_in_direction(body, g.unit(2));
      auto z = boundary_point_in_direction(body, g.unit(2)) + g.uniform(0.0, 0.3) * g.unit(2);
      const double big = g.uniform(0.01, 1.0), small = big * g.uniform(0.01, 0.99);
      if (!lambda_contains(body, x, big, z)) continue;
      ++premises;
      EXPECT_TRUE(lambda_contains(body, x, small, z));
    }
    EXPECT_GT(premises, 50);
  }
}

TEST(LambdaContains, TinyEpsilonSeesEveryOtherBoundaryPoint) {
  Gen g(82);
  for (const auto& body : {unit_disk(), ellipse41(), SmoothBody::ball(Point<double>{1.0, 2.0, 3.0}, 2.0)}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto x = boundary_point_in_direction(body, g.unit(body.dim()));
      auto z = boundary_point_in_direction(body, g.unit(body.dim()));
      if (norm(x - z) < 1e-3) continue;
      EXPECT_TRUE(lambda_contains(body, x, 1e-6, z));
    }
  }
}

// --- smooth_hidden_sequence ---------------------------------------------------

TEST(SmoothSequence, DiskEight) {
  auto disk = unit_disk();
  auto c = smooth_hidden_sequence(disk, 8, 1);
  ASSERT_EQ(c.certificate.size(), 8u);
  EXPECT_TRUE(verify_certificate(disk, c.certificate));
  for (const auto& p : c.certificate.points) EXPECT_EQ(contains(disk, p), Membership::outside);
  ASSERT_EQ(c.trace.steps.size(), 8u);
  for (std::size_t k = 0; k < 8; ++k) {
    const auto& s = c.trace.steps[k];
    EXPECT_EQ(contains(disk, s.x), Membership::boundary);
    EXPECT_LT(norm(s.point() - c.certificate.points[k]), 1e-15);
    EXPECT_GT(s.offset, 0.0);
  }
}

TEST(SmoothSequence, EllipseSix) {
  auto e = ellipse41();
  auto c = smooth_hidden_sequence(e, 6, 0);
  ASSERT_EQ(c.certificate.size(), 6u);
  EXPECT_TRUE(verify_certificate(e, c.certificate));
}

TEST(SmoothSequence, AntipodalPairInThreeDimensions) {
  auto ball = SmoothBody::ball(Point<double>{0.0, 0.0, 0.0}, 1.0);
  std::vector<Point<double>> dirs = {{0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}};
  auto c = smooth_hidden_sequence(ball, 2, dirs);
  ASSERT_EQ(c.certificate.size(), 2u);
  EXPECT_LT(norm(c.certificate.witnesses[0].point), 1e-9);
}

TEST(SmoothSequence, OracleDiskMatchesTheExplicitDisk) {
  OracleBody oracle(
      [](const Point<double>& x) {
        double e = norm(x) - 1.0;
        return e < -1e-7 ? Membership::inside : (e <= 1e-7 ? Membership::boundary : Membership::outside);
      },
      Point<double>{0.0, 0.0});
  auto c = smooth_hidden_sequence(ConvexBody(oracle), 6, 2);
  ASSERT_EQ(c.certificate.size(), 6u);
  EXPECT_TRUE(std::holds_alternative<HiddenSetCertificate<double>>(is_hidden(unit_disk(), c.certificate.points)));
}

TEST(SmoothSequence, SeedIsReproducible) {
  auto a = smooth_hidden_sequence(unit_disk(), 10, 7), b = smooth_hidden_sequence(unit_disk(), 10, 7);
  EXPECT_EQ(a.certificate.points, b.certificate.points);
}

TEST(SmoothSequence, StallCarriesAPartialCertificate) {
  // Every seed is the same direction, so the second point can never be placed.
  std::vector<Point<double>> dirs(5, Point<double>{1.0, 0.0});
  try {
    smooth_hidden_sequence(unit_disk(), 3, dirs);
    FAIL() << "expected a stall";
  } catch (const ConstructionStalled& e) {
    EXPECT_NE(std::string(e.what()).find("construction stalled"), std::string::npos);
    EXPECT_EQ(e.partial().certificate.size(), 1u);
  }
}

TEST(SmoothSequence, LaterPointsLieInEveryEarlierLambda) {
  auto disk = unit_disk();
  auto c = smooth_hidden_sequence(disk, 8, 3);
  const auto& steps = c.trace.steps;
  for (std::size_t n = 1; n < steps.size(); ++n)
    for (std::size_t k = 0; k < n; ++k) EXPECT_TRUE(lambda_contains(disk, steps[k].x, steps[k].offset, steps[n].x));
}

// --- flat pieces ---------------------------------------------------------------

TEST(FlatPieces, SeparationExample) {
  auto body = rounded_square(0.3);
  auto wide = edge_center_pieces(body, 1.0);
  for (const auto& p : wide) EXPECT_TRUE(verify_flat_piece(body, p));
  EXPECT_NO_THROW(check_separation(wide[0], wide[2]));  // opposite: |y0 - y2| = 2
  EXPECT_THROW(check_separation(wide[0], wide[1]), Error);
  EXPECT_THROW(flat_piece_hidden_sequence(body, wide, 0), Error);
  auto narrow = edge_center_pieces(body, 0.5);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) EXPECT_NO_THROW(check_separation(narrow[a], narrow[b]));
}

TEST(FlatPieces, RoundedSquareCertificate) {
  auto body = rounded_square(0.5);
  auto pieces = edge_center_pieces(body, 0.5);
  auto c = flat_piece_hidden_sequence(body, pieces, 0);
  ASSERT_EQ(c.certificate.size(), 4u);
  EXPECT_TRUE(verify_certificate(body, c.certificate));
  EXPECT_DOUBLE_EQ(c.trace.steps[0].offset, 1.0 / 12.0);
  for (const auto& p : c.certificate.points) EXPECT_EQ(contains(body, p), Membership::outside);
}

TEST(FlatPieces, SinglePiece) {
  auto body = rounded_square(0.5);
  auto c = flat_piece_hidden_sequence(body, {edge_center_pieces(body, 0.5)[0]}, 0);
  EXPECT_EQ(c.certificate.size(), 1u);
}

TEST(FlatPieces, NonFlatPieceIsRejected) {
  auto body = rounded_square(0.5);
  // Centred on a corner arc: the boundary there is curved.
  Point<double> n = normalized(Point<double>{1.0, 1.0});
  FlatPiece arc{Point<double>{1.0, 1.0} + 0.5 * n, n, 0.2};
  EXPECT_FALSE(verify_flat_piece(body, arc));
  // Too wide for the edge.
  FlatPiece wide{Point<double>{0.0, 1.5}, Point<double>{0.0, 1.0}, 1.5};
  EXPECT_FALSE(verify_flat_piece(body, wide));
  EXPECT_THROW(flat_piece_hidden_sequence(body, {arc}, 0), Error);
}

TEST(FlatPieces, GeneratedPiecesVerifyAndSeparate) {
  RoundedPolygon body({{0.0, 0.0}, {4.0, 0.0}, {5.0, 2.0}, {2.0, 4.0}, {-1.0, 2.0}}, 0.25);
  auto pieces = flat_pieces(body);
  ASSERT_EQ(pieces.size(), 5u);
  for (const auto& p : pieces) EXPECT_TRUE(verify_flat_piece(body, p));
  for (std::size_t a = 0; a < pieces.size(); ++a)
    for (std::size_t b = a + 1; b < pieces.size(); ++b) EXPECT_NO_THROW(check_separation(pieces[a], pieces[b]));
  auto c = flat_piece_hidden_sequence(body, pieces, 9);
  EXPECT_EQ(c.certificate.size(), 5u);
  EXPECT_TRUE(verify_certificate(body, c.certificate));
}

// Long edges on a thin body: the eps-ball would otherwise cross to the far side.
TEST(FlatPieces, ThinPolygonPiecesStayFlat) {
  RoundedPolygon body({{-4.0, -0.2}, {4.0, -0.2}, {4.5, 0.0}, {4.0, 0.2}, {-4.0, 0.2}}, 0.1);
  auto pieces = flat_pieces(body);
  ASSERT_EQ(pieces.size(), 5u);
  for (const auto& p : pieces) {
    EXPECT_TRUE(verify_flat_piece(body, p));
    EXPECT_LE(p.eps, 0.6);
  }
}

TEST(Claim4, Examples) {
  auto body = rounded_square(0.5);
  auto pieces = edge_center_pieces(body, 0.5);
  const double delta = 0.5 * 0.5 / 3.0;
  EXPECT_TRUE(claim4_check(body, pieces[0], pieces[2], 1.0 / 12.0));
  EXPECT_TRUE(claim4_check(body, pieces[0], pieces[1], 1.0 / 12.0));
  EXPECT_TRUE(claim4_check(body, pieces[3], pieces[0], delta));
  EXPECT_THROW(claim4_check(body, pieces[0], pieces[1], delta * 1.01), Error);
  EXPECT_THROW(claim4_check(body, pieces[0], pieces[1], 0.0), Error);
}
