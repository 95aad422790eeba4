#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace dotscape {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace detail

/// Reads "x,y" rows. Blank lines are skipped; the first non-blank line is a
/// header if its first field is not a number. Duplicate points are dropped.
inline dedupe_result read_cloud_csv(std::istream& in, std::string provenance = {}) {
  std::vector<point2> points;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = detail::trim(line);
    if (row.empty()) continue;
    const bool first = !seen_content;
    seen_content = true;

    const auto comma = row.find(',');
    const std::string_view x_text = row.substr(0, comma);
    double x = 0.0;
    double y = 0.0;
    if (!detail::parse_double(x_text, x)) {
      if (first) continue;  // header
      throw parse_error("expected a number in the first field, got '" +
                            std::string(detail::trim(x_text)) + "'",
                        line_no);
    }
    if (comma == std::string_view::npos) throw parse_error("expected two fields 'x,y'", line_no);
    const std::string_view rest = row.substr(comma + 1);
    if (rest.find(',') != std::string_view::npos)
      throw parse_error("expected two fields 'x,y', found more", line_no);
    if (!detail::parse_double(rest, y))
      throw parse_error("expected a number in the second field, got '" +
                            std::string(detail::trim(rest)) + "'",
                        line_no);
    if (!std::isfinite(x) || !std::isfinite(y)) throw parse_error("coordinate is not finite", line_no);
    points.push_back({x, y});
  }
  if (in.bad()) throw io_error("read failed for " + provenance);
  if (points.empty()) throw ingestion_error("no points in " + (provenance.empty() ? "input" : provenance));
  return dedupe(points, std::move(provenance));
}

inline dedupe_result read_cloud_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  return read_cloud_csv(in, path);
}

/// Fixed-point with `decimals` places, trailing zeros dropped: 1.05, 3, inf.
inline std::string format_decimal(double value, int decimals = 4) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

inline std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

// "x,y" rows with six decimals, no header.
inline void write_cloud_csv(std::ostream& os, std::span<const point2> points) {
  for (const point2& p : points) os << format_fixed(p.x, 6) << ',' << format_fixed(p.y, 6) << '\n';
}

}  // namespace dotscape
