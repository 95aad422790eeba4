#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace dotscape {

enum class complex_mode { cech, rips };

inline std::string_view to_string(complex_mode mode) noexcept {
  return mode == complex_mode::cech ? "cech" : "rips";
}

inline complex_mode parse_complex_mode(std::string_view text) {
  if (text == "cech") return complex_mode::cech;
  if (text == "rips") return complex_mode::rips;
  throw invalid_parameter("unknown complex mode '" + std::string(text) + "'");
}

using vertex_id = std::uint32_t;

// Sorted tuple of 1-3 distinct point indices.
class simplex {
 public:
  simplex() = default;

  explicit simplex(vertex_id v) : vertices_{v, 0, 0}, size_(1) {}

  simplex(vertex_id a, vertex_id b) : size_(2) {
    if (a == b) throw invalid_parameter("simplex: repeated vertex");
    vertices_ = {std::min(a, b), std::max(a, b), 0};
  }

  simplex(vertex_id a, vertex_id b, vertex_id c) : size_(3) {
    std::array<vertex_id, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2]) throw invalid_parameter("simplex: repeated vertex");
    vertices_ = v;
  }

  int dimension() const noexcept { return static_cast<int>(size_) - 1; }
  std::size_t size() const noexcept { return size_; }
  vertex_id operator[](std::size_t i) const noexcept { return vertices_[i]; }
  std::span<const vertex_id> vertices() const noexcept { return {vertices_.data(), size_}; }

  // Codimension-1 faces in lexicographic order; empty for vertices.
  std::vector<simplex> faces() const {
    switch (size_) {
      case 2:
        return {simplex(vertices_[0]), simplex(vertices_[1])};
      case 3:
        return {simplex(vertices_[0], vertices_[1]), simplex(vertices_[0], vertices_[2]),
                simplex(vertices_[1], vertices_[2])};
      default:
        return {};
    }
  }

  friend bool operator==(const simplex& a, const simplex& b) noexcept {
    return a.size_ == b.size_ && a.vertices_ == b.vertices_;
  }

  // Lexicographic on the vertex tuple; shorter prefixes first.
  friend bool lex_less(const simplex& a, const simplex& b) noexcept {
    return std::lexicographical_compare(a.vertices_.begin(), a.vertices_.begin() + a.size_,
                                        b.vertices_.begin(), b.vertices_.begin() + b.size_);
  }

 private:
  std::array<vertex_id, 3> vertices_{0, 0, 0};
  std::uint8_t size_ = 0;
};

struct filtered_simplex {
  simplex cell;
  double value = 0.0;
};

// Total order used for every filtration: (value, dimension, lexicographic vertices).
inline bool filtration_less(const filtered_simplex& a, const filtered_simplex& b) noexcept {
  if (a.value != b.value) return a.value < b.value;
  if (a.cell.dimension() != b.cell.dimension()) return a.cell.dimension() < b.cell.dimension();
  return lex_less(a.cell, b.cell);
}

/// Growing-discs filtration of a point cloud, capped at dimension 2.
class filtration {
 public:
  filtration(std::vector<filtered_simplex> simplices, point_cloud cloud, complex_mode mode,
             double r_max)
      : simplices_(std::move(simplices)), cloud_(std::move(cloud)), mode_(mode), r_max_(r_max) {}

  std::span<const filtered_simplex> simplices() const noexcept { return simplices_; }
  const filtered_simplex& operator[](std::size_t i) const { return simplices_[i]; }
  std::size_t size() const noexcept { return simplices_.size(); }
  const point_cloud& cloud() const noexcept { return cloud_; }
  complex_mode mode() const noexcept { return mode_; }
  double r_max() const noexcept { return r_max_; }

 private:
  std::vector<filtered_simplex> simplices_;
  point_cloud cloud_;
  complex_mode mode_;
  double r_max_;
};

/// r_max used when the caller gives none.
///
/// Scaled so the last hole has filled in: past the radius of the cloud's
/// enclosing disc (at most diameter / sqrt 3) the Čech union is contractible,
/// and past diameter / 2 the Rips complex is a full simplex. Clouds with zero
/// diameter get 1.
inline double default_r_max(const point_cloud& cloud) {
  const double diameter = cloud.diameter();
  if (diameter == 0.0) return 1.0;
  return 1.01 * diameter / std::sqrt(3.0);
}

namespace detail {

inline void check_r_max(double r_max) {
  if (!(r_max > 0.0) || !std::isfinite(r_max))
    throw invalid_parameter("r_max must be a positive finite number");
}

template <typename TriangleValue>
filtration build_filtration(const point_cloud& cloud, double r_max, complex_mode mode,
                            TriangleValue&& triangle_value) {
  check_r_max(r_max);
  const std::size_t n = cloud.size();
  std::vector<filtered_simplex> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back({simplex(static_cast<vertex_id>(i)), 0.0});

  // Edge values, indexed densely; NaN marks pairs beyond r_max.
  std::vector<double> edge(n * n, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double value = min_enclosing_radius({cloud[i], cloud[j]});
      if (value <= r_max) {
        edge[i * n + j] = value;
        out.push_back({simplex(static_cast<vertex_id>(i), static_cast<vertex_id>(j)), value});
      }
    }
  }

  // Only triples whose three edges all exist can carry a triangle.
  std::vector<std::size_t> neighbours;
  for (std::size_t i = 0; i < n; ++i) {
    neighbours.clear();
    for (std::size_t j = i + 1; j < n; ++j)
      if (!std::isnan(edge[i * n + j])) neighbours.push_back(j);
    for (std::size_t a = 0; a < neighbours.size(); ++a) {
      const std::size_t j = neighbours[a];
      for (std::size_t b = a + 1; b < neighbours.size(); ++b) {
        const std::size_t k = neighbours[b];
        const double jk = edge[j * n + k];
        if (std::isnan(jk)) continue;
        const double faces_max = std::max({edge[i * n + j], edge[i * n + k], jk});
        const double value = std::max(triangle_value(i, j, k, faces_max), faces_max);
        if (value <= r_max)
          out.push_back({simplex(static_cast<vertex_id>(i), static_cast<vertex_id>(j),
                                 static_cast<vertex_id>(k)),
                         value});
      }
    }
  }

  std::sort(out.begin(), out.end(), filtration_less);
  return filtration(std::move(out), cloud, mode, r_max);
}

}  // namespace detail

/// Čech filtration: each simplex enters at the radius where its discs first
/// share a common point.
inline filtration build_cech(const point_cloud& cloud, double r_max) {
  return detail::build_filtration(
      cloud, r_max, complex_mode::cech,
      [&cloud](std::size_t i, std::size_t j, std::size_t k, double) {
        return min_enclosing_radius({cloud[i], cloud[j], cloud[k]});
      });
}

/// Vietoris-Rips filtration: a triangle enters once all of its edges exist.
inline filtration build_rips(const point_cloud& cloud, double r_max) {
  return detail::build_filtration(
      cloud, r_max, complex_mode::rips,
      [](std::size_t, std::size_t, std::size_t, double faces_max) { return faces_max; });
}

inline filtration build_filtration(const point_cloud& cloud, double r_max, complex_mode mode) {
  return mode == complex_mode::cech ? build_cech(cloud, r_max) : build_rips(cloud, r_max);
}

// Strictly increasing distinct filtration values.
inline std::vector<double> critical_radii(const filtration& f) {
  std::vector<double> radii;
  for (const filtered_simplex& s : f.simplices())
    if (radii.empty() || s.value != radii.back()) radii.push_back(s.value);
  return radii;
}

}  // namespace dotscape
