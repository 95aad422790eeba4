#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "dotscape/persistence.hpp"
#include "test_support.hpp"

namespace dotscape {
namespace {

using testing::equilateral_triangle;
using testing::random_cloud;
using testing::unit_square;

const double circumradius = 2.0 / std::sqrt(3.0);
const double half_diagonal = std::sqrt(2.0) / 2.0;

std::vector<std::pair<double, double>> finite_and_essential(const std::vector<persistence_pair>& pairs) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : pairs) out.emplace_back(p.birth, p.death);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::tuple<int, std::size_t, std::size_t>> pairing(const barcode& b) {
  std::vector<std::tuple<int, std::size_t, std::size_t>> out;
  for (const auto& p : b.pairs) out.emplace_back(p.dimension, p.birth_index, p.death_index);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ComputePersistence, IsolatedPointsNeverConnect) {
  std::vector<point2> pts;
  for (int i = 0; i < 5; ++i) pts.push_back({i * 10.0, i * i * 3.0});
  const barcode b = compute_persistence(build_cech(point_cloud(pts), 1.0));
  ASSERT_EQ(b.pairs.size(), 5u);
  for (const auto& p : b.pairs) {
    EXPECT_EQ(p.dimension, 0);
    EXPECT_TRUE(p.essential());
  }
}

TEST(ComputePersistence, EquilateralTriangle) {
  const barcode b = compute_persistence(build_cech(equilateral_triangle(), 5.0));
  const auto h0 = b.in_dimension(0);
  ASSERT_EQ(h0.size(), 3u);
  EXPECT_EQ(std::count_if(h0.begin(), h0.end(), [](auto& p) { return p.essential(); }), 1);
  for (const auto& p : h0) {
    EXPECT_EQ(p.birth, 0.0);
    if (!p.essential()) { EXPECT_NEAR(p.death, 1.0, 1e-12); }
  }
  const auto h1 = b.in_dimension(1);
  ASSERT_EQ(h1.size(), 1u);
  EXPECT_NEAR(h1[0].birth, 1.0, 1e-9);
  EXPECT_NEAR(h1[0].death, circumradius, 1e-9 * circumradius);
  EXPECT_TRUE(b.cavity_births.empty());
}

TEST(ComputePersistence, UnitSquare) {
  const barcode b = compute_persistence(build_cech(unit_square(), 5.0));
  const auto h0 = b.in_dimension(0);
  ASSERT_EQ(h0.size(), 4u);
  int essential = 0;
  for (const auto& p : h0) {
    if (p.essential())
      ++essential;
    else
      EXPECT_EQ(p.death, 0.5);
  }
  EXPECT_EQ(essential, 1);
  const auto h1 = b.in_dimension(1, false);
  ASSERT_EQ(h1.size(), 1u);
  EXPECT_EQ(h1[0].birth, 0.5);
  EXPECT_NEAR(h1[0].death, half_diagonal, 1e-9 * half_diagonal);
}

TEST(ComputePersistence, RejectsFaceAfterCoface) {
  const point_cloud c({{0, 0}, {1, 0}});
  const filtration bad({{simplex(0), 0.0}, {simplex(0, 1), 0.5}, {simplex(1), 0.0}}, c,
                       complex_mode::cech, 1.0);
  EXPECT_THROW(compute_persistence(bad), structure_error);
  reduction_options homology;
  homology.algorithm = reduction_algorithm::homology;
  EXPECT_THROW(compute_persistence(bad, homology), structure_error);
  EXPECT_THROW(connected_persistence(bad), structure_error);

  const filtration repeated({{simplex(0), 0.0}, {simplex(1), 0.0}, {simplex(1), 0.0}}, c,
                            complex_mode::cech, 1.0);
  EXPECT_THROW(compute_persistence(repeated), structure_error);
}

TEST(BoundaryMatrix, VertexColumnsEmptyAndFacesEarlier) {
  const filtration f = build_cech(random_cloud(12, 4), 3.0);
  const boundary_matrix m = build_boundary_matrix(f);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m.dimensions[j] == 0) { EXPECT_TRUE(m.columns[j].empty()); }
    EXPECT_EQ(m.columns[j].size(), static_cast<std::size_t>(m.dimensions[j] == 0 ? 0 : m.dimensions[j] + 1));
    for (auto face : m.columns[j]) EXPECT_LT(face, j);
  }
}

TEST(ConnectedPersistence, Examples) {
  std::vector<point2> pts;
  for (int i = 0; i < 4; ++i) pts.push_back({i * 10.0, 0});
  const auto isolated = connected_persistence(build_cech(point_cloud(pts), 1.0));
  EXPECT_EQ(isolated.size(), 4u);
  for (const auto& p : isolated) EXPECT_TRUE(p.essential());

  const auto two = connected_persistence(build_cech(point_cloud({{0, 0}, {2, 0}}), 5.0));
  EXPECT_EQ(finite_and_essential(two),
            (std::vector<std::pair<double, double>>{{0.0, 1.0}, {0.0, persistence_pair::infinite}}));
}

TEST(ConnectedPersistence, ElderRuleKeepsSmallestIndex) {
  // Points 0 and 2 join first, then 1 joins them: vertex 2 then vertex 1 die.
  const point_cloud c({{0, 0}, {10, 0}, {1, 0}});
  const auto pairs = connected_persistence(build_cech(c, 20.0));
  const filtration f = build_cech(c, 20.0);
  std::vector<vertex_id> dead;
  for (const auto& p : pairs)
    if (!p.essential()) dead.push_back(f[p.birth_index].cell[0]);
  EXPECT_EQ(dead, (std::vector<vertex_id>{2, 1}));
}

TEST(BettiAt, Examples) {
  const barcode b = compute_persistence(build_cech(equilateral_triangle(), 5.0));
  EXPECT_EQ(betti_at(b, 0.0), (topology_signature{3, 0}));
  EXPECT_EQ(betti_at(b, 1.05), (topology_signature{1, 1}));
  EXPECT_EQ(betti_at(b, 1.2), (topology_signature{1, 0}));
  // Half-open: counted at birth, gone at death.
  EXPECT_EQ(betti_at(b, 1.0), (topology_signature{1, 1}));
  EXPECT_EQ(betti_at(b, b.pairs.back().death), (topology_signature{1, 0}));
}

TEST(BettiAt, RangeErrors) {
  const barcode b = compute_persistence(build_cech(equilateral_triangle(), 5.0));
  EXPECT_THROW(betti_at(b, -0.1), range_error);
  EXPECT_THROW(betti_at(b, 5.01), range_error);
  EXPECT_THROW(betti_at(b, std::nan("")), range_error);
  EXPECT_NO_THROW(betti_at(b, 5.0));
}

TEST(BettiTable, Examples) {
  const barcode tri = compute_persistence(build_cech(equilateral_triangle(), 5.0));
  const std::vector<double> r1{0, 1.05, 1.2};
  EXPECT_EQ(betti_table(tri, r1), (std::vector<betti_row>{{0, {3, 0}}, {1.05, {1, 1}}, {1.2, {1, 0}}}));

  const barcode single = compute_persistence(build_cech(point_cloud({{4, 4}}), 1.0));
  const std::vector<double> r2{0, 1};
  EXPECT_EQ(betti_table(single, r2), (std::vector<betti_row>{{0, {1, 0}}, {1, {1, 0}}}));

  const barcode sq = compute_persistence(build_cech(unit_square(), 5.0));
  const std::vector<double> r3{0.3, 0.6, 0.8};
  EXPECT_EQ(betti_table(sq, r3), (std::vector<betti_row>{{0.3, {4, 0}}, {0.6, {1, 1}}, {0.8, {1, 0}}}));
}

TEST(BettiTable, Errors) {
  const barcode tri = compute_persistence(build_cech(equilateral_triangle(), 5.0));
  const std::vector<double> unsorted{1.0, 0.5};
  EXPECT_THROW(betti_table(tri, unsorted), invalid_parameter);
  const std::vector<double> outside{0.5, 6.0};
  EXPECT_THROW(betti_table(tri, outside), range_error);
}

class PersistenceProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PersistenceProperties, AllReductionRoutesGiveTheSamePairing) {
  const point_cloud cloud = random_cloud(30, GetParam());
  for (const auto mode : {complex_mode::cech, complex_mode::rips}) {
    const filtration f = build_filtration(cloud, 4.0, mode);
    reduction_options homology, cleared;
    homology.algorithm = cleared.algorithm = reduction_algorithm::homology;
    cleared.clearing = true;
    const barcode a = compute_persistence(f);
    const barcode b = compute_persistence(f, homology);
    const barcode c = compute_persistence(f, cleared);
    EXPECT_EQ(pairing(a), pairing(b));
    EXPECT_EQ(pairing(a), pairing(c));
    EXPECT_EQ(a.cavity_births, b.cavity_births);
  }
}

TEST_P(PersistenceProperties, UnionFindMatchesReduction) {
  const filtration f = build_cech(random_cloud(50, GetParam()), 3.0);
  EXPECT_EQ(finite_and_essential(connected_persistence(f)),
            finite_and_essential(compute_persistence(f).in_dimension(0)));
}

TEST_P(PersistenceProperties, PairCountConservation) {
  const filtration f = build_cech(random_cloud(30, GetParam()), 5.0);
  const barcode b = compute_persistence(f);
  std::size_t columns_used = b.cavity_births.size();
  for (const auto& p : b.pairs) columns_used += p.essential() ? 1 : 2;
  EXPECT_EQ(columns_used, f.size());
  EXPECT_EQ(b.in_dimension(0).size(), b.point_count);
  for (const auto& p : b.pairs) {
    EXPECT_LE(p.birth, p.death);
    if (p.dimension == 0) { EXPECT_EQ(p.birth, 0.0); }
  }
}

TEST_P(PersistenceProperties, RankOracleAndEulerIdentity) {
  const point_cloud cloud = random_cloud(10, GetParam());
  for (const auto mode : {complex_mode::cech, complex_mode::rips}) {
    const filtration f = build_filtration(cloud, 8.0, mode);
    const barcode b = compute_persistence(f);
    for (double r : critical_radii(f)) {
      const auto counts = testing::rank_betti(cloud, r, mode == complex_mode::rips);
      const topology_signature s = betti_at(b, r);
      EXPECT_EQ(s.pieces, counts.b0) << "r=" << r;
      EXPECT_EQ(s.holes, counts.b1) << "r=" << r;
      EXPECT_EQ(cavities_at(b, r), counts.b2) << "r=" << r;
      const long euler = static_cast<long>(counts.vertices) - static_cast<long>(counts.edges) +
                         static_cast<long>(counts.triangles);
      EXPECT_EQ(euler, static_cast<long>(s.pieces) - static_cast<long>(s.holes) +
                           static_cast<long>(cavities_at(b, r)));
    }
  }
}

TEST_P(PersistenceProperties, PiecesNonIncreasingAndTerminalBlob) {
  const point_cloud cloud = random_cloud(40, GetParam());
  const double diameter = cloud.diameter();
  const barcode b = compute_persistence(build_cech(cloud, diameter));
  std::size_t previous = cloud.size();
  for (int i = 0; i <= 200; ++i) {
    const auto s = betti_at(b, std::min(diameter, diameter * i / 200.0));
    EXPECT_LE(s.pieces, previous);
    EXPECT_GE(s.pieces, 1u);
    previous = s.pieces;
  }
  EXPECT_EQ(betti_at(b, diameter), (topology_signature{1, 0}));
}

TEST_P(PersistenceProperties, Deterministic) {
  const filtration f = build_cech(random_cloud(35, GetParam()), 4.0);
  const barcode a = compute_persistence(f), b = compute_persistence(f);
  ASSERT_EQ(a.pairs.size(), b.pairs.size());
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    EXPECT_EQ(a.pairs[i].birth, b.pairs[i].birth);
    EXPECT_EQ(a.pairs[i].death, b.pairs[i].death);
    EXPECT_EQ(a.pairs[i].birth_index, b.pairs[i].birth_index);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PersistenceProperties, ::testing::Range<std::uint64_t>(0, 10));

}  // namespace
}  // namespace dotscape
