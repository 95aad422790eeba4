#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "analysis.hpp"
#include "io.hpp"
#include "persistence.hpp"

namespace dotscape {

// ---- Betti tables -----------------------------------------------------------

inline void write_betti_csv(std::ostream& os, std::span<const betti_row> rows,
                            std::span<const topology_signature> oracle = {}) {
  os << "radius,pieces,holes";
  if (!oracle.empty()) os << ",oracle_pieces,oracle_holes";
  os << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    os << format_decimal(row.radius) << ',' << row.signature.pieces << ',' << row.signature.holes;
    if (!oracle.empty()) os << ',' << oracle[i].pieces << ',' << oracle[i].holes;
    os << '\n';
  }
}

inline nlohmann::json betti_json(const barcode& b, std::span<const betti_row> rows,
                                 std::span<const topology_signature> oracle = {}) {
  nlohmann::json out;
  out["mode"] = to_string(b.mode);
  out["r_max"] = b.r_max;
  out["point_count"] = b.point_count;
  auto& list = out["rows"] = nlohmann::json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    nlohmann::json row{{"radius", rows[i].radius},
                       {"pieces", rows[i].signature.pieces},
                       {"holes", rows[i].signature.holes}};
    if (!oracle.empty()) row["oracle"] = {{"pieces", oracle[i].pieces}, {"holes", oracle[i].holes}};
    list.push_back(std::move(row));
  }
  return out;
}

// ---- Barcodes ---------------------------------------------------------------

inline std::vector<persistence_pair> reported_pairs(const barcode& b, bool include_zero_length) {
  std::vector<persistence_pair> out;
  for (const auto& p : b.pairs)
    if (p.dimension <= 1 && (include_zero_length || !p.zero_length())) out.push_back(p);
  return out;
}

// "dimension,birth,death" rows; essential deaths print as "inf".
inline void write_barcode_csv(std::ostream& os, const barcode& b, bool include_zero_length = false) {
  os << "dimension,birth,death\n";
  for (const auto& p : reported_pairs(b, include_zero_length))
    os << p.dimension << ',' << format_decimal(p.birth) << ',' << format_decimal(p.death) << '\n';
}

// Full precision; essential deaths are null.
inline nlohmann::json barcode_json(const barcode& b, bool include_zero_length = false) {
  nlohmann::json out;
  out["mode"] = to_string(b.mode);
  out["r_max"] = b.r_max;
  out["point_count"] = b.point_count;
  auto& list = out["pairs"] = nlohmann::json::array();
  for (const auto& p : reported_pairs(b, include_zero_length)) {
    nlohmann::json pair{{"dimension", p.dimension}, {"birth", p.birth}};
    pair["death"] = p.essential() ? nlohmann::json(nullptr) : nlohmann::json(p.death);
    list.push_back(std::move(pair));
  }
  return out;
}

inline nlohmann::json groups_json(std::span<const signature_group> groups) {
  auto out = nlohmann::json::array();
  for (const auto& g : groups)
    out.push_back({{"signature", {{"pieces", g.signature.pieces}, {"holes", g.signature.holes}}},
                   {"members", g.members}});
  return out;
}

// ---- SVG --------------------------------------------------------------------

enum class plot_view { barcode, diagram };

namespace detail {

inline std::string px(double v) { return format_fixed(v, 2); }

inline void svg_open(std::ostream& os, double width, double height, std::string_view title) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\""
     << px(height) << "\" viewBox=\"0 0 " << px(width) << ' ' << px(height) << "\">\n"
     << "<title>" << title << "</title>\n"
     << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/></marker>"
        "</defs>\n"
     << "<style>.dim0{stroke:#1f77b4;fill:#1f77b4}.dim1{stroke:#d62728;fill:#d62728}"
        ".axis{stroke:#444;fill:none}.guide{stroke:#999;stroke-dasharray:4 3;fill:none}"
        "text{font-family:sans-serif;font-size:11px;fill:#222;stroke:none}</style>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << px(width) << "\" height=\"" << px(height)
     << "\" fill=\"white\"/>\n";
}

inline void svg_text(std::ostream& os, double x, double y, std::string_view anchor, std::string_view text) {
  os << "<text x=\"" << px(x) << "\" y=\"" << px(y) << "\" text-anchor=\"" << anchor << "\">" << text
     << "</text>\n";
}

inline std::string pair_class(const persistence_pair& p, std::string_view kind) {
  std::string c(kind);
  c += " dim" + std::to_string(p.dimension);
  if (p.essential()) c += " essential";
  return c;
}

inline std::string pair_data(const persistence_pair& p) {
  return " data-birth=\"" + format_decimal(p.birth, 6) + "\" data-death=\"" +
         format_decimal(p.death, 6) + "\"";
}

}  // namespace detail

/// Barcode view: one horizontal bar per pair in two lanes (pieces, holes);
/// essential bars run to r_max and end in an arrowhead.
inline void write_barcode_svg(std::ostream& os, const barcode& b, bool include_zero_length = false) {
  const auto pairs = reported_pairs(b, include_zero_length);
  constexpr double left = 110.0, right = 610.0, top = 40.0, step = 8.0, lane_gap = 30.0;
  const double scale = b.r_max > 0 ? (right - left) / b.r_max : 0.0;
  std::size_t rows[2] = {0, 0};
  for (const auto& p : pairs) ++rows[p.dimension];
  const double lane_height[2] = {std::max<double>(1, rows[0]) * step, std::max<double>(1, rows[1]) * step};
  const double height = top + lane_height[0] + lane_gap + lane_height[1] + 50.0;

  detail::svg_open(os, 640.0, height, "persistence barcode");
  const char* names[2] = {"pieces (H0)", "holes (H1)"};
  double lane_top[2] = {top, top + lane_height[0] + lane_gap};
  for (int d = 0; d < 2; ++d) {
    detail::svg_text(os, left - 8.0, lane_top[d] + 10.0, "end", names[d]);
    if (rows[d] == 0) detail::svg_text(os, left + 4.0, lane_top[d] + 10.0, "start", "none");
  }
  std::size_t index[2] = {0, 0};
  for (const auto& p : pairs) {
    const int d = p.dimension;
    const double y = lane_top[d] + step * (static_cast<double>(index[d]++) + 0.5);
    const double x1 = left + p.birth * scale;
    const double x2 = left + (p.essential() ? b.r_max : p.death) * scale;
    os << "<line class=\"" << detail::pair_class(p, "bar") << "\"" << detail::pair_data(p)
       << " x1=\"" << detail::px(x1) << "\" y1=\"" << detail::px(y) << "\" x2=\"" << detail::px(x2)
       << "\" y2=\"" << detail::px(y) << "\" stroke-width=\"4\""
       << (p.essential() ? " marker-end=\"url(#arrow)\"" : "") << "/>\n";
  }
  const double axis_y = height - 35.0;
  os << "<line class=\"axis\" x1=\"" << detail::px(left) << "\" y1=\"" << detail::px(axis_y)
     << "\" x2=\"" << detail::px(right) << "\" y2=\"" << detail::px(axis_y) << "\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double r = b.r_max * t / 4.0;
    detail::svg_text(os, left + r * scale, axis_y + 15.0, "middle", format_decimal(r));
  }
  detail::svg_text(os, (left + right) / 2.0, axis_y + 30.0, "middle", "disc radius");
  os << "</svg>\n";
}

/// Diagram view: (birth, death) points above the diagonal; essential points
/// sit on a dashed line labelled inf above the plot.
inline void write_diagram_svg(std::ostream& os, const barcode& b, bool include_zero_length = false) {
  const auto pairs = reported_pairs(b, include_zero_length);
  constexpr double left = 60.0, bottom = 500.0, size = 420.0, inf_y = 50.0;
  const double scale = b.r_max > 0 ? size / b.r_max : 0.0;
  auto to_x = [&](double v) { return left + v * scale; };
  auto to_y = [&](double v) { return bottom - v * scale; };

  detail::svg_open(os, 520.0, 560.0, "persistence diagram");
  os << "<line class=\"axis\" x1=\"" << detail::px(left) << "\" y1=\"" << detail::px(bottom)
     << "\" x2=\"" << detail::px(left + size) << "\" y2=\"" << detail::px(bottom) << "\"/>\n"
     << "<line class=\"axis\" x1=\"" << detail::px(left) << "\" y1=\"" << detail::px(bottom)
     << "\" x2=\"" << detail::px(left) << "\" y2=\"" << detail::px(inf_y) << "\"/>\n"
     << "<line class=\"guide diagonal\" x1=\"" << detail::px(left) << "\" y1=\"" << detail::px(bottom)
     << "\" x2=\"" << detail::px(left + size) << "\" y2=\"" << detail::px(bottom - size) << "\"/>\n"
     << "<line class=\"guide\" x1=\"" << detail::px(left) << "\" y1=\"" << detail::px(inf_y)
     << "\" x2=\"" << detail::px(left + size) << "\" y2=\"" << detail::px(inf_y) << "\"/>\n";
  detail::svg_text(os, left - 6.0, inf_y + 4.0, "end", "inf");
  for (int t = 0; t <= 4; ++t) {
    const double r = b.r_max * t / 4.0;
    detail::svg_text(os, to_x(r), bottom + 15.0, "middle", format_decimal(r));
    detail::svg_text(os, left - 6.0, to_y(r) + 4.0, "end", format_decimal(r));
  }
  detail::svg_text(os, left + size / 2.0, bottom + 35.0, "middle", "birth radius");
  detail::svg_text(os, 14.0, bottom - size / 2.0, "middle", "death");
  for (const auto& p : pairs) {
    const double y = p.essential() ? inf_y : to_y(p.death);
    os << "<circle class=\"" << detail::pair_class(p, "point") << "\"" << detail::pair_data(p)
       << " cx=\"" << detail::px(to_x(p.birth)) << "\" cy=\"" << detail::px(y) << "\" r=\"3\"/>\n";
  }
  detail::svg_text(os, left + size - 4.0, inf_y + 20.0, "end", "pieces (H0) / holes (H1)");
  os << "</svg>\n";
}

inline void write_svg(std::ostream& os, const barcode& b, plot_view view,
                      bool include_zero_length = false) {
  if (view == plot_view::barcode)
    write_barcode_svg(os, b, include_zero_length);
  else
    write_diagram_svg(os, b, include_zero_length);
}

}  // namespace dotscape
