#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>

#include "dotscape/geometry.hpp"
#include "test_support.hpp"

namespace dotscape {
namespace {

TEST(Distance, Examples) {
  EXPECT_EQ(distance({0, 0}, {0, 0}), 0.0);
  EXPECT_EQ(distance({0, 0}, {3, 4}), 5.0);
  EXPECT_EQ(distance({1, 1}, {4, 5}), 5.0);
}

TEST(Distance, SymmetricAndZeroOnlyWhenCoincident) {
  std::mt19937_64 g(3);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int i = 0; i < 200; ++i) {
    const point2 p{u(g), u(g)}, q{u(g), u(g)};
    EXPECT_EQ(distance(p, q), distance(q, p));
    EXPECT_GT(distance(p, q), 0.0);
    EXPECT_EQ(distance(p, p), 0.0);
  }
}

TEST(MinEnclosingRadius, SinglePointIsZero) { EXPECT_EQ(min_enclosing_radius({{7, -2}}), 0.0); }

TEST(MinEnclosingRadius, PairIsHalfDistance) { EXPECT_EQ(min_enclosing_radius({{0, 0}, {0, 2}}), 1.0); }

TEST(MinEnclosingRadius, EquilateralIsCircumradius) {
  const point_cloud tri = testing::equilateral_triangle();
  const double r = min_enclosing_radius(tri.points());
  EXPECT_NEAR(r, 2.0 / std::sqrt(3.0), 1e-12);
  // Oracle: every vertex lies on the circle about the centroid.
  const point2 centroid{(tri[0].x + tri[1].x + tri[2].x) / 3.0, (tri[0].y + tri[1].y + tri[2].y) / 3.0};
  for (const point2& p : tri.points()) EXPECT_NEAR(distance(p, centroid), r, 1e-12);
}

TEST(MinEnclosingRadius, ObtuseIsHalfLongestSide) {
  EXPECT_EQ(min_enclosing_radius({{0, 0}, {4, 0}, {1, 0.1}}), 2.0);
  // Oracle: the third point is inside the circle on the longest side.
  EXPECT_LT(distance({1, 0.1}, {2, 0}), 2.0);
}

TEST(MinEnclosingRadius, RightTriangleUsesHypotenuse) {
  EXPECT_DOUBLE_EQ(min_enclosing_radius({{0, 0}, {3, 0}, {0, 4}}), 2.5);
}

TEST(MinEnclosingRadius, RejectsBadVertexCounts) {
  EXPECT_THROW(min_enclosing_radius(std::span<const point2>{}), invalid_parameter);
  EXPECT_THROW(min_enclosing_radius({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), invalid_parameter);
}

TEST(MinEnclosingRadiusProperty, PermutationInvariant) {
  std::mt19937_64 g(11);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<point2, 3> v{{{u(g), u(g)}, {u(g), u(g)}, {u(g), u(g)}}};
    const double base = min_enclosing_radius(v);
    std::sort(v.begin(), v.end(), [](auto a, auto b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
    do {
      EXPECT_NEAR(min_enclosing_radius(v), base, 1e-12 * base);
    } while (std::next_permutation(v.begin(), v.end(), [](auto a, auto b) {
      return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    }));
  }
}

TEST(MinEnclosingRadiusProperty, RigidMotionInvariant) {
  std::mt19937_64 g(12);
  std::uniform_real_distribution<double> u(-10, 10);
  std::uniform_real_distribution<double> angle(0, 2 * 3.141592653589793);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<point2, 3> v{{{u(g), u(g)}, {u(g), u(g)}, {u(g), u(g)}}};
    const double t = angle(g), dx = u(g) * 100, dy = u(g) * 100;
    std::array<point2, 3> w;
    for (std::size_t i = 0; i < 3; ++i)
      w[i] = {std::cos(t) * v[i].x - std::sin(t) * v[i].y + dx,
              std::sin(t) * v[i].x + std::cos(t) * v[i].y + dy};
    const double a = min_enclosing_radius(v);
    EXPECT_NEAR(min_enclosing_radius(w), a, 1e-9 * a);
  }
}

TEST(MinEnclosingRadiusProperty, TriangleDominatesItsEdges) {
  std::mt19937_64 g(13);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<point2, 3> v{{{u(g), u(g)}, {u(g), u(g)}, {u(g), u(g)}}};
    const double tri = min_enclosing_radius(v);
    EXPECT_GE(tri, min_enclosing_radius({v[0], v[1]}));
    EXPECT_GE(tri, min_enclosing_radius({v[0], v[2]}));
    EXPECT_GE(tri, min_enclosing_radius({v[1], v[2]}));
  }
}

TEST(MinEnclosingRadiusProperty, EnclosesAllVerticesAgainstBruteForce) {
  // Oracle: search candidate centres (pair midpoints, circumcentre) directly.
  std::mt19937_64 g(14);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<point2, 3> v{{{u(g), u(g)}, {u(g), u(g)}, {u(g), u(g)}}};
    double best = std::numeric_limits<double>::infinity();
    auto consider = [&](point2 c) {
      double worst = 0;
      for (auto p : v) worst = std::max(worst, distance(p, c));
      best = std::min(best, worst);
    };
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) consider({(v[i].x + v[j].x) / 2, (v[i].y + v[j].y) / 2});
    const double ax = v[0].x, ay = v[0].y, bx = v[1].x, by = v[1].y, cx = v[2].x, cy = v[2].y;
    const double d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    consider({((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d,
              ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d});
    EXPECT_NEAR(min_enclosing_radius(v), best, 1e-9 * best);
  }
}

TEST(Dedupe, RemovesLaterDuplicates) {
  const std::vector<point2> raw{{0, 0}, {1, 1}, {0, 0}};
  const auto result = dedupe(raw);
  EXPECT_EQ(result.removed, 1u);
  ASSERT_EQ(result.cloud.size(), 2u);
  EXPECT_EQ(result.cloud[0], (point2{0, 0}));
  EXPECT_EQ(result.cloud[1], (point2{1, 1}));
}

TEST(Dedupe, DistinctInputUnchanged) {
  const std::vector<point2> raw{{0, 0}, {1, 1}};
  const auto result = dedupe(raw);
  EXPECT_EQ(result.removed, 0u);
  EXPECT_EQ(std::vector<point2>(result.cloud.points().begin(), result.cloud.points().end()), raw);

  std::vector<point2> many;
  for (int i = 0; i < 100; ++i) many.push_back({i * 0.5, (i * 37 % 100) * 0.25});
  const auto big = dedupe(many);
  EXPECT_EQ(big.removed, 0u);
  EXPECT_EQ(big.cloud.size(), 100u);
}

TEST(Dedupe, SignedZeroIsTheSamePoint) {
  const std::vector<point2> raw{{0.0, 1.0}, {-0.0, 1.0}};
  EXPECT_EQ(dedupe(raw).removed, 1u);
}

TEST(Dedupe, Errors) {
  EXPECT_THROW(dedupe(std::span<const point2>{}), ingestion_error);
  const std::vector<point2> bad{{0, std::nan("")}};
  EXPECT_THROW(dedupe(bad), ingestion_error);
}

TEST(PointCloud, Diameter) {
  EXPECT_EQ(point_cloud({{1, 1}}).diameter(), 0.0);
  EXPECT_DOUBLE_EQ(testing::unit_square().diameter(), std::sqrt(2.0));
}

}  // namespace
}  // namespace dotscape
