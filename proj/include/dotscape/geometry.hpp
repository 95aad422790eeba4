#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dotscape {

struct point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const point2&, const point2&) = default;
};

inline bool is_finite(const point2& p) noexcept {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

inline double distance(const point2& p, const point2& q) noexcept {
  return std::hypot(p.x - q.x, p.y - q.y);
}

inline double squared_distance(const point2& p, const point2& q) noexcept {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

// Relative tolerance for the acute/obtuse decision in min_enclosing_radius.
inline constexpr double right_angle_tolerance = 1e-9;

/// Radius of the smallest circle containing 1-3 distinct points.
///
/// This is the disc radius at which discs centred on the points first share
/// a common point. For three points the result is never smaller than half of
/// any pairwise distance, so a triangle never appears before its edges.
inline double min_enclosing_radius(std::span<const point2> vertices) {
  switch (vertices.size()) {
    case 1:
      return 0.0;
    case 2:
      return distance(vertices[0], vertices[1]) / 2.0;
    case 3:
      break;
    default:
      throw invalid_parameter("min_enclosing_radius: expected 1 to 3 vertices, got " +
                              std::to_string(vertices.size()));
  }

  const point2& a = vertices[0];
  const point2& b = vertices[1];
  const point2& c = vertices[2];
  const double ab = distance(a, b);
  const double bc = distance(b, c);
  const double ca = distance(c, a);
  const double longest = std::max({ab, bc, ca});
  const double half_longest = longest / 2.0;

  // Law of cosines at the angle opposite the longest side.
  const double sq_sum = ab * ab + bc * bc + ca * ca;
  const double longest_sq = longest * longest;
  const double others_sq = sq_sum - longest_sq;
  if (others_sq - longest_sq <= right_angle_tolerance * longest_sq) {
    return half_longest;
  }

  // Acute: circumradius R = abc / (2 |cross|).
  const double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  const double circumradius = ab * bc * ca / (2.0 * std::abs(cross));
  return std::max(circumradius, half_longest);
}

inline double min_enclosing_radius(std::initializer_list<point2> vertices) {
  return min_enclosing_radius(std::span<const point2>(vertices.begin(), vertices.size()));
}

// Finite list of distinct planar points.
class point_cloud {
 public:
  point_cloud() = default;

  // Callers must guarantee the invariants; use dedupe() for raw input.
  point_cloud(std::vector<point2> points, std::string provenance = {})
      : points_(std::move(points)), provenance_(std::move(provenance)) {}

  std::span<const point2> points() const noexcept { return points_; }
  const point2& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::string& provenance() const noexcept { return provenance_; }

  // Largest pairwise distance; 0 for fewer than two points.
  double diameter() const noexcept {
    double best = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        best = std::max(best, squared_distance(points_[i], points_[j]));
    return std::sqrt(best);
  }

  friend bool operator==(const point_cloud& a, const point_cloud& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<point2> points_;
  std::string provenance_;
};

struct dedupe_result {
  point_cloud cloud;
  std::size_t removed = 0;
};

namespace detail {

struct point_hash {
  std::size_t operator()(const point2& p) const noexcept {
    // +0.0 and -0.0 compare equal, so hash them alike.
    const double x = p.x == 0.0 ? 0.0 : p.x;
    const double y = p.y == 0.0 ? 0.0 : p.y;
    const std::size_t hx = std::hash<double>{}(x);
    return hx ^ (std::hash<double>{}(y) + 0x9e3779b97f4a7c15ULL + (hx << 6) + (hx >> 2));
  }
};

}  // namespace detail

/// Drops exactly coincident points, keeping the first occurrence.
inline dedupe_result dedupe(std::span<const point2> raw, std::string provenance = {}) {
  if (raw.empty()) throw ingestion_error("point cloud is empty");
  std::unordered_set<point2, detail::point_hash> seen;
  seen.reserve(raw.size());
  std::vector<point2> kept;
  kept.reserve(raw.size());
  for (const point2& p : raw) {
    if (!is_finite(p)) throw ingestion_error("point has a non-finite coordinate");
    if (seen.insert(p).second) kept.push_back(p);
  }
  const std::size_t removed = raw.size() - kept.size();
  return {point_cloud(std::move(kept), std::move(provenance)), removed};
}

}  // namespace dotscape
