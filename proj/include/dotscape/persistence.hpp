#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "filtration.hpp"
#include "signature.hpp"
#include "union_find.hpp"

namespace dotscape {

using column_index = std::uint32_t;

// Boundary operator over the two-element field, one column per filtered
// simplex. Column entries are sorted indices of codimension-1 faces.
struct boundary_matrix {
  std::vector<std::vector<column_index>> columns;
  std::vector<int> dimensions;

  std::size_t size() const noexcept { return columns.size(); }
};

namespace detail {

inline constexpr std::uint64_t max_packed_vertex = (std::uint64_t{1} << 21) - 2;

inline std::uint64_t pack(const simplex& s) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > max_packed_vertex) throw invalid_parameter("point index too large to encode");
    key |= (std::uint64_t{s[i]} + 1) << (21 * i);
  }
  return key;
}

}  // namespace detail

/// Builds the boundary matrix, rejecting filtrations where a face is missing,
/// repeated, or listed after one of its cofaces.
inline boundary_matrix build_boundary_matrix(const filtration& f) {
  if (f.size() > std::numeric_limits<column_index>::max())
    throw invalid_parameter("filtration too large");
  std::unordered_map<std::uint64_t, column_index> index_of;
  index_of.reserve(f.size());
  boundary_matrix m;
  m.columns.resize(f.size());
  m.dimensions.resize(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const simplex& cell = f[j].cell;
    m.dimensions[j] = cell.dimension();
    auto& column = m.columns[j];
    for (const simplex& face : cell.faces()) {
      const auto it = index_of.find(detail::pack(face));
      if (it == index_of.end())
        throw structure_error("simplex " + std::to_string(j) +
                              " appears before one of its faces (or the face is missing)");
      column.push_back(it->second);
    }
    std::sort(column.begin(), column.end());
    if (!index_of.emplace(detail::pack(cell), static_cast<column_index>(j)).second)
      throw structure_error("simplex " + std::to_string(j) + " is repeated");
  }
  return m;
}

enum class reduction_algorithm {
  // Coboundary reduction from the last simplex backwards, one dimension at a
  // time, clearing columns already known to be zero.
  cohomology,
  // Plain left-to-right reduction of the boundary matrix.
  homology,
};

struct reduction_options {
  reduction_algorithm algorithm = reduction_algorithm::cohomology;
  // Homology only: skip columns already known to reduce to zero because
  // their index is the pivot of a higher-dimensional column.
  bool clearing = false;
};

inline constexpr std::int64_t no_pivot = -1;

namespace detail {

inline void add_column(std::vector<column_index>& work, const std::vector<column_index>& other,
                       std::vector<column_index>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(work.begin(), work.end(), other.begin(), other.end(),
                                std::back_inserter(scratch));
  work.swap(scratch);
}

}  // namespace detail

/// Left-to-right column reduction. Returns the pivot (lowest nonzero row) of
/// each reduced column, or no_pivot for columns that reduce to zero.
inline std::vector<std::int64_t> reduce(const boundary_matrix& m, bool clearing = false) {
  const std::size_t n = m.size();
  std::vector<std::int64_t> low(n, no_pivot);
  std::vector<std::int64_t> owner(n, no_pivot);  // row -> column whose pivot it is
  std::vector<std::vector<column_index>> reduced(n);
  std::vector<bool> cleared(n, false);
  std::vector<column_index> work;
  std::vector<column_index> scratch;

  // Pivots of dimension-d columns are rows of dimension d-1, so reducing one
  // dimension at a time, highest first, gives the same result as a single
  // left-to-right pass and lets clearing act.
  int top = 0;
  for (int d : m.dimensions) top = std::max(top, d);
  for (int dim = top; dim >= 1; --dim) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.dimensions[j] != dim || cleared[j]) continue;
      work = m.columns[j];
      while (!work.empty()) {
        const std::int64_t other = owner[work.back()];
        if (other == no_pivot) break;
        detail::add_column(work, reduced[static_cast<std::size_t>(other)], scratch);
      }
      if (work.empty()) continue;
      const column_index pivot = work.back();
      low[j] = pivot;
      owner[pivot] = static_cast<std::int64_t>(j);
      if (clearing) cleared[pivot] = true;
      reduced[j] = std::move(work);
      work = {};
    }
  }
  return low;
}

// Cofaces of every simplex, as sorted filtration positions.
struct coboundary_lists {
  std::vector<std::vector<column_index>> cofaces;
  std::vector<int> dimensions;

  std::size_t size() const noexcept { return cofaces.size(); }
};

/// Builds coface lists with the same validation as build_boundary_matrix.
inline coboundary_lists build_coboundary_lists(const filtration& f) {
  if (f.size() > std::numeric_limits<column_index>::max())
    throw invalid_parameter("filtration too large");
  // Triangles are never faces, so only vertices and edges are indexed.
  std::unordered_map<std::uint64_t, column_index> index_of;
  coboundary_lists c;
  c.cofaces.resize(f.size());
  c.dimensions.resize(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const simplex& cell = f[j].cell;
    c.dimensions[j] = cell.dimension();
    for (const simplex& face : cell.faces()) {
      const auto it = index_of.find(detail::pack(face));
      if (it == index_of.end())
        throw structure_error("simplex " + std::to_string(j) +
                              " appears before one of its faces (or the face is missing)");
      c.cofaces[it->second].push_back(static_cast<column_index>(j));
    }
    if (cell.dimension() < 2 &&
        !index_of.emplace(detail::pack(cell), static_cast<column_index>(j)).second)
      throw structure_error("simplex " + std::to_string(j) + " is repeated");
  }
  return c;
}

/// Coboundary reduction with clearing. Columns are processed from the last
/// simplex to the first; the pivot of a column is its earliest coface. A
/// column of simplex j with pivot p means j creates the feature p destroys.
/// Returns the pivot of each column, or no_pivot.
inline std::vector<std::int64_t> reduce_coboundary(const coboundary_lists& c) {
  const std::size_t n = c.size();
  std::vector<std::int64_t> pivot_of(n, no_pivot);
  std::vector<std::int64_t> owner(n, no_pivot);
  std::vector<std::vector<column_index>> reduced(n);
  std::vector<bool> cleared(n, false);
  std::vector<column_index> work;
  std::vector<column_index> scratch;

  int top = 0;
  for (int d : c.dimensions) top = std::max(top, d);
  for (int dim = 0; dim < top; ++dim) {
    for (std::size_t j = n; j-- > 0;) {
      if (c.dimensions[j] != dim || cleared[j]) continue;
      work = c.cofaces[j];
      while (!work.empty()) {
        const std::int64_t other = owner[work.front()];
        if (other == no_pivot) break;
        detail::add_column(work, reduced[static_cast<std::size_t>(other)], scratch);
      }
      if (work.empty()) continue;
      const column_index pivot = work.front();
      pivot_of[j] = pivot;
      owner[pivot] = static_cast<std::int64_t>(j);
      cleared[pivot] = true;
      reduced[j] = std::move(work);
      work = {};
    }
  }
  return pivot_of;
}

struct persistence_pair {
  static constexpr double infinite = std::numeric_limits<double>::infinity();
  static constexpr std::size_t no_index = static_cast<std::size_t>(-1);

  int dimension = 0;
  double birth = 0.0;
  double death = infinite;
  // Filtration positions of the creating and killing simplices.
  std::size_t birth_index = 0;
  std::size_t death_index = no_index;

  bool essential() const noexcept { return std::isinf(death); }
  bool zero_length() const noexcept { return !essential() && birth == death; }
  double lifetime() const noexcept { return death - birth; }
  bool alive_at(double r) const noexcept { return birth <= r && r < death; }
};

// Pieces (dimension 0) and holes (dimension 1) over the radius range
// [0, r_max]. Zero-length pairs are kept; reports filter them.
struct barcode {
  std::vector<persistence_pair> pairs;
  // Births of 2-cycles that nothing kills within the 2-skeleton.
  std::vector<double> cavity_births;
  double r_max = 0.0;
  complex_mode mode = complex_mode::cech;
  std::size_t point_count = 0;

  std::vector<persistence_pair> in_dimension(int dimension, bool include_zero_length = true) const {
    std::vector<persistence_pair> out;
    for (const auto& p : pairs)
      if (p.dimension == dimension && (include_zero_length || !p.zero_length())) out.push_back(p);
    return out;
  }
};

/// Persistence pairs of a filtration over the two-element field.
///
/// The pairing of simplices is unique for a fixed filtration order, so every
/// reduction_algorithm yields the same barcode.
inline barcode compute_persistence(const filtration& f, reduction_options options = {}) {
  // creator -> destroyer
  std::vector<std::int64_t> destroyer(f.size(), no_pivot);
  std::vector<bool> destroys(f.size(), false);
  std::vector<int> dimensions;
  if (options.algorithm == reduction_algorithm::homology) {
    const boundary_matrix m = build_boundary_matrix(f);
    const std::vector<std::int64_t> low = reduce(m, options.clearing);
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (low[j] == no_pivot) continue;
      destroyer[static_cast<std::size_t>(low[j])] = static_cast<std::int64_t>(j);
      destroys[j] = true;
    }
    dimensions = m.dimensions;
  } else {
    const coboundary_lists c = build_coboundary_lists(f);
    const std::vector<std::int64_t> pivot = reduce_coboundary(c);
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (pivot[j] == no_pivot) continue;
      destroyer[j] = pivot[j];
      destroys[static_cast<std::size_t>(pivot[j])] = true;
    }
    dimensions = c.dimensions;
  }

  barcode b;
  b.r_max = f.r_max();
  b.mode = f.mode();
  b.point_count = f.cloud().size();
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (destroys[j]) continue;
    if (destroyer[j] != no_pivot) {
      const auto k = static_cast<std::size_t>(destroyer[j]);
      b.pairs.push_back({dimensions[j], f[j].value, f[k].value, j, k});
    } else if (dimensions[j] == 2) {
      b.cavity_births.push_back(f[j].value);
    } else {
      b.pairs.push_back({dimensions[j], f[j].value, persistence_pair::infinite, j,
                         persistence_pair::no_index});
    }
  }
  std::stable_sort(b.pairs.begin(), b.pairs.end(),
                   [](const auto& x, const auto& y) { return x.dimension < y.dimension; });
  return b;
}

/// Dimension-0 pairs by union-find over the edges in filtration order.
///
/// When two pieces merge the one whose smallest vertex index is larger dies
/// at the edge's value; every piece is born at 0.
inline std::vector<persistence_pair> connected_persistence(const filtration& f) {
  const std::size_t n = f.cloud().size();
  std::vector<std::size_t> vertex_position(n, persistence_pair::no_index);
  union_find sets(n);
  std::vector<persistence_pair> pairs;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const simplex& cell = f[j].cell;
    if (cell.dimension() == 0) {
      vertex_position.at(cell[0]) = j;
    } else if (cell.dimension() == 1) {
      const std::size_t dead = sets.unite(cell[0], cell[1]);
      if (dead == sets.size()) continue;
      if (vertex_position[dead] == persistence_pair::no_index)
        throw structure_error("edge " + std::to_string(j) + " appears before its vertices");
      pairs.push_back({0, f[vertex_position[dead]].value, f[j].value, vertex_position[dead], j});
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (sets.find(v) != v) continue;
    if (vertex_position[v] == persistence_pair::no_index)
      throw structure_error("vertex " + std::to_string(v) + " missing from filtration");
    pairs.push_back({0, f[vertex_position[v]].value, persistence_pair::infinite, vertex_position[v],
                     persistence_pair::no_index});
  }
  return pairs;
}

namespace detail {

inline void check_radius(const barcode& b, double r) {
  if (!(r >= 0.0 && r <= b.r_max))
    throw range_error("radius " + std::to_string(r) + " outside [0, " + std::to_string(b.r_max) +
                      "]");
}

}  // namespace detail

/// Pieces and holes alive at radius r, counting each feature on [birth, death).
inline topology_signature betti_at(const barcode& b, double r) {
  detail::check_radius(b, r);
  topology_signature s;
  for (const auto& p : b.pairs) {
    if (!p.alive_at(r)) continue;
    if (p.dimension == 0)
      ++s.pieces;
    else if (p.dimension == 1)
      ++s.holes;
  }
  return s;
}

// Independent 2-cycles at radius r within the 2-skeleton.
inline std::size_t cavities_at(const barcode& b, double r) {
  detail::check_radius(b, r);
  return static_cast<std::size_t>(
      std::count_if(b.cavity_births.begin(), b.cavity_births.end(), [r](double v) { return v <= r; }));
}

struct betti_row {
  double radius = 0.0;
  topology_signature signature;

  friend bool operator==(const betti_row&, const betti_row&) = default;
};

inline std::vector<betti_row> betti_table(const barcode& b, std::span<const double> radii) {
  if (!std::is_sorted(radii.begin(), radii.end()))
    throw invalid_parameter("radii must be sorted ascending");
  std::vector<betti_row> rows;
  rows.reserve(radii.size());
  for (double r : radii) rows.push_back({r, betti_at(b, r)});
  return rows;
}

}  // namespace dotscape
