#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "filtration.hpp"
#include "persistence.hpp"
#include "signature.hpp"

namespace dotscape {

// Barcode plus the filtration values it was computed from.
struct persistence_result {
  barcode bars;
  std::vector<double> critical;
};

/// Filtration and persistence in one step. r_max defaults to default_r_max.
inline persistence_result analyze(const point_cloud& cloud, complex_mode mode,
                                  std::optional<double> r_max = std::nullopt) {
  const filtration f = build_filtration(cloud, r_max.value_or(default_r_max(cloud)), mode);
  return {compute_persistence(f), critical_radii(f)};
}

inline topology_signature signature_at(const point_cloud& cloud, double r,
                                       complex_mode mode = complex_mode::cech) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw invalid_parameter("radius must be non-negative");
  const double r_max = std::max(default_r_max(cloud), r);
  return betti_at(analyze(cloud, mode, r_max).bars, r);
}

struct betti_profile {
  std::vector<betti_row> entries;
  std::string source;
  complex_mode mode = complex_mode::cech;
};

inline betti_profile profile(const barcode& b, std::span<const double> radii,
                             std::string source = {}) {
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i - 1] < radii[i])) throw invalid_parameter("radii must be strictly increasing");
  return {betti_table(b, radii), std::move(source), b.mode};
}

inline betti_profile profile(const point_cloud& cloud, std::span<const double> radii,
                             complex_mode mode = complex_mode::cech) {
  double r_max = default_r_max(cloud);
  if (!radii.empty()) r_max = std::max(r_max, radii.back());
  return profile(analyze(cloud, mode, r_max).bars, radii, cloud.provenance());
}

namespace detail {

struct signature_run {
  double start = 0.0;
  double end = 0.0;
  topology_signature signature;
};

// Maximal radius intervals of constant signature over [0, r_max].
inline std::vector<signature_run> signature_runs(const barcode& b) {
  struct event {
    double at;
    int pieces;
    int holes;
  };
  std::vector<event> events;
  for (const auto& p : b.pairs) {
    if (p.dimension > 1 || p.zero_length()) continue;
    const int dp = p.dimension == 0 ? 1 : 0;
    events.push_back({p.birth, dp, 1 - dp});
    if (!p.essential()) events.push_back({p.death, -dp, dp - 1});
  }
  std::sort(events.begin(), events.end(), [](const event& x, const event& y) { return x.at < y.at; });

  std::vector<signature_run> runs;
  long pieces = 0;
  long holes = 0;
  for (std::size_t i = 0; i < events.size();) {
    const double at = events[i].at;
    for (; i < events.size() && events[i].at == at; ++i) {
      pieces += events[i].pieces;
      holes += events[i].holes;
    }
    if (at > b.r_max) break;
    const topology_signature s{static_cast<std::size_t>(pieces), static_cast<std::size_t>(holes)};
    if (!runs.empty() && runs.back().signature == s) continue;
    if (!runs.empty()) runs.back().end = at;
    runs.push_back({at, b.r_max, s});
  }
  return runs;
}

}  // namespace detail

inline constexpr std::size_t max_report_rows = 32;

/// Report radii when the user gives none: one radius per maximal interval of
/// constant signature. The first row is r = 0; each later row sits at the
/// midpoint between the radius where the signature changed and the next
/// critical radius. Beyond max_rows, the longest-lived signatures are kept
/// (the first and last always are) and a kept row that repeats the
/// signature of the row before it is dropped.
inline std::vector<double> default_radii(const barcode& b, std::span<const double> critical,
                                         std::size_t max_rows = max_report_rows) {
  const auto runs = detail::signature_runs(b);
  std::vector<std::size_t> keep(runs.size());
  for (std::size_t i = 0; i < runs.size(); ++i) keep[i] = i;
  if (runs.size() > max_rows && max_rows >= 2) {
    std::vector<std::size_t> middle(keep.begin() + 1, keep.end() - 1);
    std::stable_sort(middle.begin(), middle.end(), [&](std::size_t x, std::size_t y) {
      return runs[x].end - runs[x].start > runs[y].end - runs[y].start;
    });
    middle.resize(max_rows - 2);
    keep = {0, runs.size() - 1};
    keep.insert(keep.end(), middle.begin(), middle.end());
    std::sort(keep.begin(), keep.end());
    const auto repeats = std::unique(keep.begin(), keep.end(), [&](std::size_t x, std::size_t y) {
      return runs[x].signature == runs[y].signature;
    });
    keep.erase(repeats, keep.end());
  }

  std::vector<double> radii;
  for (std::size_t i : keep) {
    const double start = runs[i].start;
    if (start == 0.0) {
      radii.push_back(0.0);
      continue;
    }
    const auto next = std::upper_bound(critical.begin(), critical.end(), start);
    const double upper = next == critical.end() ? b.r_max : std::min(*next, b.r_max);
    radii.push_back((start + upper) / 2.0);
  }
  return radii;
}

struct labeled_signature {
  std::string name;
  topology_signature signature;
};

struct signature_group {
  topology_signature signature;
  std::vector<std::string> members;
};

/// Partitions items by exact signature. Groups come out ordered by
/// (pieces, holes); members keep their input order.
inline std::vector<signature_group> group_by_signature(std::span<const labeled_signature> items) {
  std::map<topology_signature, std::vector<std::string>> by_signature;
  for (const auto& item : items) {
    if (item.name.empty()) throw invalid_parameter("labeled signature needs a name");
    by_signature[item.signature].push_back(item.name);
  }
  std::vector<signature_group> groups;
  groups.reserve(by_signature.size());
  for (auto& [signature, members] : by_signature) groups.push_back({signature, std::move(members)});
  return groups;
}

inline std::vector<signature_group> group_by_signature(std::initializer_list<labeled_signature> items) {
  return group_by_signature(std::span<const labeled_signature>(items.begin(), items.size()));
}

/// Top-k non-zero-length pairs of one dimension, longest-lived first.
/// Essential pairs rank above every finite one; ties go to the earlier birth,
/// then to the earlier creating simplex.
inline std::vector<persistence_pair> most_persistent(const barcode& b, int dimension, std::size_t k) {
  if (k == 0) throw invalid_parameter("k must be at least 1");
  auto pairs = b.in_dimension(dimension, false);
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    if (x.lifetime() != y.lifetime()) return x.lifetime() > y.lifetime();
    if (x.birth != y.birth) return x.birth < y.birth;
    return x.birth_index < y.birth_index;
  });
  if (pairs.size() > k) pairs.resize(k);
  return pairs;
}

}  // namespace dotscape
