#pragma once

// Brute-force ground truth: rasterize the union of discs and count pieces
// and holes by flood fill, with no use of filtrations or persistence.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "signature.hpp"

namespace dotscape {

class bitmap {
 public:
  bitmap(std::size_t width, std::size_t height, double pixel_size, point2 origin)
      : width_(width), height_(height), pixel_size_(pixel_size), origin_(origin),
        cells_(width * height, 0) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  double pixel_size() const noexcept { return pixel_size_; }
  // World coordinates of the centre of cell (0, 0); column i, row j sits at
  // origin + (i, j) * pixel_size.
  point2 origin() const noexcept { return origin_; }

  bool at(std::size_t column, std::size_t row) const { return cells_[row * width_ + column] != 0; }
  void set(std::size_t column, std::size_t row, bool value = true) {
    cells_[row * width_ + column] = value ? 1 : 0;
  }
  point2 center(std::size_t column, std::size_t row) const noexcept {
    return {origin_.x + static_cast<double>(column) * pixel_size_,
            origin_.y + static_cast<double>(row) * pixel_size_};
  }
  std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
  }

 private:
  std::size_t width_;
  std::size_t height_;
  double pixel_size_;
  point2 origin_;
  std::vector<std::uint8_t> cells_;
};

inline constexpr std::size_t max_bitmap_cells = 100'000'000;
inline constexpr std::size_t bitmap_margin = 3;

/// Cells whose centre lies within r of some point are set. The grid covers
/// every disc with a margin of at least two cells on each side.
inline bitmap rasterize(const point_cloud& cloud, double r, double pixel_size) {
  if (cloud.empty()) throw invalid_parameter("rasterize: empty cloud");
  if (!(r > 0.0) || !std::isfinite(r)) throw invalid_parameter("rasterize: radius must be positive");
  if (!(pixel_size > 0.0) || pixel_size > r / 16.0)
    throw invalid_parameter("rasterize: pixel size must be in (0, r/16]");

  double min_x = cloud[0].x, max_x = cloud[0].x, min_y = cloud[0].y, max_y = cloud[0].y;
  for (const point2& p : cloud.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span_x = (max_x - min_x + 2.0 * r) / pixel_size;
  const double span_y = (max_y - min_y + 2.0 * r) / pixel_size;
  if (span_x * span_y > static_cast<double>(max_bitmap_cells))
    throw invalid_parameter("rasterize: pixel budget exceeded");
  const auto width = static_cast<std::size_t>(std::ceil(span_x)) + 2 * bitmap_margin + 1;
  const auto height = static_cast<std::size_t>(std::ceil(span_y)) + 2 * bitmap_margin + 1;
  if (width * height > max_bitmap_cells) throw invalid_parameter("rasterize: pixel budget exceeded");

  const double m = static_cast<double>(bitmap_margin) * pixel_size;
  bitmap bm(width, height, pixel_size, {min_x - r - m, min_y - r - m});
  const double r2 = r * r;
  for (const point2& p : cloud.points()) {
    const auto lo = [&](double v, double o) {
      return static_cast<std::size_t>(std::max(0.0, std::floor((v - r - o) / pixel_size)));
    };
    const auto hi = [&](double v, double o, std::size_t limit) {
      return std::min(limit - 1, static_cast<std::size_t>(std::ceil((v + r - o) / pixel_size)));
    };
    const std::size_t row_end = hi(p.y, bm.origin().y, height);
    const std::size_t col_end = hi(p.x, bm.origin().x, width);
    for (std::size_t row = lo(p.y, bm.origin().y); row <= row_end; ++row)
      for (std::size_t col = lo(p.x, bm.origin().x); col <= col_end; ++col)
        if (squared_distance(bm.center(col, row), p) <= r2) bm.set(col, row);
  }
  return bm;
}

namespace detail {

// Number of connected regions of cells equal to `value`.
inline std::size_t count_regions(const bitmap& bm, bool value, bool diagonal) {
  const std::size_t w = bm.width();
  const std::size_t h = bm.height();
  std::vector<std::uint8_t> seen(w * h, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  std::size_t regions = 0;
  for (std::size_t row = 0; row < h; ++row) {
    for (std::size_t col = 0; col < w; ++col) {
      if (seen[row * w + col] || bm.at(col, row) != value) continue;
      ++regions;
      seen[row * w + col] = 1;
      stack.emplace_back(col, row);
      while (!stack.empty()) {
        const auto [c, r] = stack.back();
        stack.pop_back();
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            if ((dr == 0 && dc == 0) || (!diagonal && dr != 0 && dc != 0)) continue;
            const auto nc = static_cast<std::ptrdiff_t>(c) + dc;
            const auto nr = static_cast<std::ptrdiff_t>(r) + dr;
            if (nc < 0 || nr < 0 || nc >= static_cast<std::ptrdiff_t>(w) ||
                nr >= static_cast<std::ptrdiff_t>(h))
              continue;
            const auto idx = static_cast<std::size_t>(nr) * w + static_cast<std::size_t>(nc);
            if (seen[idx] || bm.at(static_cast<std::size_t>(nc), static_cast<std::size_t>(nr)) != value)
              continue;
            seen[idx] = 1;
            stack.emplace_back(static_cast<std::size_t>(nc), static_cast<std::size_t>(nr));
          }
        }
      }
    }
  }
  return regions;
}

// True when the cell and its eight neighbours are all background. Cells off
// the grid count as background.
inline bool deep_background(const bitmap& bm, std::size_t col, std::size_t row) {
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      const auto nc = static_cast<std::ptrdiff_t>(col) + dc;
      const auto nr = static_cast<std::ptrdiff_t>(row) + dr;
      if (nc < 0 || nr < 0 || nc >= static_cast<std::ptrdiff_t>(bm.width()) ||
          nr >= static_cast<std::ptrdiff_t>(bm.height()))
        continue;
      if (bm.at(static_cast<std::size_t>(nc), static_cast<std::size_t>(nr))) return false;
    }
  }
  return true;
}

// 4-connected background regions that stay off the grid border and contain
// at least one deep cell. Regions made only of cells touching the foreground
// are slivers trapped where two disc boundaries cross at a sharp angle, not
// holes of the union.
inline std::size_t count_holes(const bitmap& bm) {
  const std::size_t w = bm.width();
  const std::size_t h = bm.height();
  std::vector<std::uint8_t> seen(w * h, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  std::size_t regions = 0;
  for (std::size_t row = 0; row < h; ++row) {
    for (std::size_t col = 0; col < w; ++col) {
      if (seen[row * w + col] || bm.at(col, row)) continue;
      bool deep = false;
      bool border = false;
      seen[row * w + col] = 1;
      stack.emplace_back(col, row);
      while (!stack.empty()) {
        const auto [c, r] = stack.back();
        stack.pop_back();
        deep = deep || deep_background(bm, c, r);
        border = border || c == 0 || r == 0 || c + 1 == w || r + 1 == h;
        const std::pair<int, int> steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& [dc, dr] : steps) {
          const auto nc = static_cast<std::ptrdiff_t>(c) + dc;
          const auto nr = static_cast<std::ptrdiff_t>(r) + dr;
          if (nc < 0 || nr < 0 || nc >= static_cast<std::ptrdiff_t>(w) ||
              nr >= static_cast<std::ptrdiff_t>(h))
            continue;
          const auto idx = static_cast<std::size_t>(nr) * w + static_cast<std::size_t>(nc);
          if (seen[idx] || bm.at(static_cast<std::size_t>(nc), static_cast<std::size_t>(nr))) continue;
          seen[idx] = 1;
          stack.emplace_back(static_cast<std::size_t>(nc), static_cast<std::size_t>(nr));
        }
      }
      if (deep && !border) ++regions;
    }
  }
  return regions;
}

}  // namespace detail

/// Pieces are 8-connected foreground regions. Holes are 4-connected
/// background regions other than the outside, ignoring one-cell-thick slivers.
inline topology_signature oracle_signature(const bitmap& bm) {
  return {detail::count_regions(bm, true, true), detail::count_holes(bm)};
}

// Plain (ASCII "P1") portable bitmap, top row first, 1 = inside a disc.
inline void write_pbm(std::ostream& os, const bitmap& bm) {
  os << "P1\n" << bm.width() << ' ' << bm.height() << '\n';
  for (std::size_t row = bm.height(); row-- > 0;) {
    std::size_t on_line = 0;
    for (std::size_t col = 0; col < bm.width(); ++col) {
      if (on_line == 70) {
        os << '\n';
        on_line = 0;
      }
      os << (bm.at(col, row) ? '1' : '0');
      ++on_line;
    }
    os << '\n';
  }
}

}  // namespace dotscape
