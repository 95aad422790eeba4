#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace dotscape {

enum class shape_kind { circle, annulus, figure_eight, grid };

inline shape_kind parse_shape_kind(std::string_view text) {
  if (text == "circle") return shape_kind::circle;
  if (text == "annulus") return shape_kind::annulus;
  if (text == "figure_eight" || text == "figure-eight") return shape_kind::figure_eight;
  if (text == "grid") return shape_kind::grid;
  throw invalid_parameter("unknown shape '" + std::string(text) + "'");
}

inline std::string_view to_string(shape_kind kind) noexcept {
  switch (kind) {
    case shape_kind::circle: return "circle";
    case shape_kind::annulus: return "annulus";
    case shape_kind::figure_eight: return "figure_eight";
    case shape_kind::grid: return "grid";
  }
  return "unknown";
}

// Shape parameters. Unused fields are ignored by shapes that do not need them.
//
//   circle        count points at angles 2*pi*i/count on a circle of `radius`
//                 about the origin.
//   annulus       count points uniform by area between `inner_radius` and
//                 `radius`.
//   figure_eight  two circles of `radius` centred at (-radius, 0) and
//                 (radius, 0), touching at the origin; the first
//                 ceil(count/2) points go on the left circle. Angles are
//                 offset by half a step so no point lands on the origin.
//   grid          columns x rows lattice with `spacing`, corner at the origin.
//
// Every coordinate then gets independent Gaussian noise with deviation `noise`.
struct shape_params {
  std::size_t count = 60;
  double radius = 10.0;
  double inner_radius = 5.0;
  std::size_t columns = 4;
  std::size_t rows = 4;
  double spacing = 1.0;
  double noise = 0.0;
  std::uint64_t seed = 0;
};

namespace detail {

// Gaussian samples from mt19937_64 by Box-Muller; the standard library
// distributions are not reproducible across implementations.
class portable_normal {
 public:
  explicit portable_normal(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

inline void validate(shape_kind kind, const shape_params& p) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!(std::isfinite(p.noise) && p.noise >= 0.0)) throw invalid_parameter("noise must be >= 0");
  if (kind == shape_kind::grid) {
    if (!positive(p.spacing)) throw invalid_parameter("grid spacing must be positive");
    if (p.columns * p.rows < 3) throw invalid_parameter("grid needs at least 3 points");
    return;
  }
  if (p.count < 3) throw invalid_parameter("shape needs at least 3 points");
  if (!positive(p.radius)) throw invalid_parameter("radius must be positive");
  if (kind == shape_kind::annulus &&
      !(std::isfinite(p.inner_radius) && p.inner_radius >= 0.0 && p.inner_radius < p.radius))
    throw invalid_parameter("annulus needs 0 <= inner_radius < radius");
}

}  // namespace detail

/// Deterministic sample of a named shape; the same arguments always give the
/// same cloud.
inline point_cloud generate(shape_kind kind, const shape_params& p) {
  detail::validate(kind, p);
  detail::portable_normal rng(p.seed);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<point2> points;

  switch (kind) {
    case shape_kind::circle:
      for (std::size_t i = 0; i < p.count; ++i) {
        const double t = two_pi * static_cast<double>(i) / static_cast<double>(p.count);
        points.push_back({p.radius * std::cos(t), p.radius * std::sin(t)});
      }
      break;
    case shape_kind::annulus: {
      const double lo = p.inner_radius * p.inner_radius;
      const double hi = p.radius * p.radius;
      for (std::size_t i = 0; i < p.count; ++i) {
        const double t = two_pi * rng.uniform();
        const double rho = std::sqrt(lo + (hi - lo) * rng.uniform());
        points.push_back({rho * std::cos(t), rho * std::sin(t)});
      }
      break;
    }
    case shape_kind::figure_eight: {
      const std::size_t left = (p.count + 1) / 2;
      const std::size_t right = p.count - left;
      for (std::size_t i = 0; i < left; ++i) {
        const double t = two_pi * (static_cast<double>(i) + 0.5) / static_cast<double>(left);
        points.push_back({-p.radius + p.radius * std::cos(t), p.radius * std::sin(t)});
      }
      for (std::size_t i = 0; i < right; ++i) {
        const double t =
            std::numbers::pi + two_pi * (static_cast<double>(i) + 0.5) / static_cast<double>(right);
        points.push_back({p.radius + p.radius * std::cos(t), p.radius * std::sin(t)});
      }
      break;
    }
    case shape_kind::grid:
      for (std::size_t r = 0; r < p.rows; ++r)
        for (std::size_t c = 0; c < p.columns; ++c)
          points.push_back({p.spacing * static_cast<double>(c), p.spacing * static_cast<double>(r)});
      break;
  }

  if (p.noise > 0.0) {
    for (point2& q : points) {
      q.x += p.noise * rng.normal();
      q.y += p.noise * rng.normal();
    }
  }
  return dedupe(points, std::string(to_string(kind))).cloud;
}

}  // namespace dotscape
