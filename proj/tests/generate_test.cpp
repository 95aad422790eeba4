#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "dotscape/analysis.hpp"
#include "dotscape/generate.hpp"
#include "dotscape/io.hpp"
#include "dotscape/oracle.hpp"

namespace dotscape {
namespace {

TEST(Generate, ExactCircleWithoutNoise) {
  shape_params p;
  p.count = 60;
  p.radius = 10;
  const point_cloud c = generate(shape_kind::circle, p);
  ASSERT_EQ(c.size(), 60u);
  for (const point2& q : c.points()) EXPECT_NEAR(std::hypot(q.x, q.y), 10.0, 1e-12);
}

TEST(Generate, SameSeedSameCloud) {
  for (auto kind : {shape_kind::circle, shape_kind::annulus, shape_kind::figure_eight, shape_kind::grid}) {
    shape_params p;
    p.count = 40;
    p.noise = 0.3;
    p.seed = 17;
    std::ostringstream a, b;
    write_cloud_csv(a, generate(kind, p).points());
    write_cloud_csv(b, generate(kind, p).points());
    EXPECT_EQ(a.str(), b.str());
    p.seed = 18;
    std::ostringstream c;
    write_cloud_csv(c, generate(kind, p).points());
    EXPECT_NE(a.str(), c.str());
  }
}

TEST(Generate, FigureEightHasTwoHoles) {
  shape_params p;
  p.count = 80;
  p.radius = 5;
  p.noise = 0.1;
  p.seed = 2;
  const point_cloud c = generate(shape_kind::figure_eight, p);
  EXPECT_EQ(c.size(), 80u);
  // Oracle first, then the nerve.
  EXPECT_EQ(oracle_signature(rasterize(c, 1.0, 0.02)), (topology_signature{1, 2}));
  EXPECT_EQ(signature_at(c, 1.0), (topology_signature{1, 2}));
}

TEST(Generate, AnnulusStaysInsideItsRing) {
  shape_params p;
  p.count = 200;
  p.radius = 6;
  p.inner_radius = 4;
  p.seed = 3;
  for (const point2& q : generate(shape_kind::annulus, p).points()) {
    EXPECT_GE(std::hypot(q.x, q.y), 4.0 - 1e-9);
    EXPECT_LE(std::hypot(q.x, q.y), 6.0 + 1e-9);
  }
}

TEST(Generate, GridLayout) {
  shape_params p;
  p.columns = 3;
  p.rows = 2;
  p.spacing = 1.5;
  const point_cloud c = generate(shape_kind::grid, p);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c[4], (point2{1.5, 1.5}));
}

TEST(Generate, RejectsInvalidParameters) {
  shape_params p;
  p.count = 2;
  EXPECT_THROW(generate(shape_kind::circle, p), invalid_parameter);
  p.count = 10;
  p.radius = -1;
  EXPECT_THROW(generate(shape_kind::circle, p), invalid_parameter);
  p.radius = 5;
  p.noise = -0.1;
  EXPECT_THROW(generate(shape_kind::figure_eight, p), invalid_parameter);
  p.noise = 0;
  p.inner_radius = 6;
  EXPECT_THROW(generate(shape_kind::annulus, p), invalid_parameter);
  p.columns = 1;
  p.rows = 2;
  EXPECT_THROW(generate(shape_kind::grid, p), invalid_parameter);
  EXPECT_THROW(parse_shape_kind("star"), invalid_parameter);
}

TEST(GenerateProperty, FixturesEndAsOneBlob) {
  for (auto kind : {shape_kind::circle, shape_kind::annulus, shape_kind::figure_eight, shape_kind::grid}) {
    shape_params p;
    p.count = 50;
    p.radius = 4;
    p.inner_radius = 2;
    p.noise = 0.05;
    p.seed = 9;
    const point_cloud c = generate(kind, p);
    const double d = c.diameter();
    const barcode b = analyze(c, complex_mode::cech, d).bars;
    const auto result = analyze(c, complex_mode::cech);
    std::size_t previous = c.size();
    for (const auto& row : betti_table(result.bars, default_radii(result.bars, result.critical))) {
      EXPECT_LE(row.signature.pieces, previous);
      previous = row.signature.pieces;
    }
    EXPECT_EQ(betti_at(b, d), (topology_signature{1, 0})) << to_string(kind);
  }
}

}  // namespace
}  // namespace dotscape
