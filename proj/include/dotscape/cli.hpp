#pragma once

// Command-line front end. run_cli() is the whole program; tools/dotscape.cpp
// only forwards main's arguments and streams.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "analysis.hpp"
#include "errors.hpp"
#include "generate.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "report.hpp"

namespace dotscape {

enum exit_code : int {
  exit_ok = 0,
  exit_io = 2,
  exit_parse = 3,
  exit_invalid = 4,
};

namespace detail {

struct cli_options {
  std::vector<std::string> inputs;
  std::string mode = "cech";
  std::optional<double> r_max;
  std::vector<double> radii;
  std::string format;
  bool include_zero_length = false;
  std::string out;
  std::optional<double> resolution;
  std::string pbm_dir;
  double query_radius = 0.0;
  std::string view = "barcode";

  std::string shape;
  shape_params params;
};

// Sends output to --out when given, otherwise to stdout. The file is only
// created once the whole output is ready.
inline void emit(const cli_options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw io_error("cannot write '" + o.out + "'");
  file << text;
  if (!file) throw io_error("write failed for '" + o.out + "'");
}

inline point_cloud load(const std::string& path, std::ostream& err) {
  auto result = read_cloud_file(path);
  if (result.removed > 0)
    err << "warning: removed " << result.removed << " duplicate point(s) from " << path << '\n';
  return std::move(result.cloud);
}

inline std::string format_or(const cli_options& o, const std::string& fallback,
                             std::initializer_list<std::string_view> allowed) {
  const std::string f = o.format.empty() ? fallback : o.format;
  for (auto a : allowed)
    if (f == a) return f;
  throw invalid_parameter("--format " + f + " is not available for this command");
}

inline persistence_result compute(const cli_options& o, const point_cloud& cloud,
                                  double at_least = 0.0) {
  const complex_mode mode = parse_complex_mode(o.mode);
  if (o.r_max) {
    if (!(*o.r_max > 0.0)) throw invalid_parameter("--rmax must be positive");
    if (*o.r_max < at_least) throw invalid_parameter("--rmax is below the largest requested radius");
    return analyze(cloud, mode, *o.r_max);
  }
  return analyze(cloud, mode, std::max(default_r_max(cloud), at_least));
}

inline int cmd_betti(const cli_options& o, std::ostream& out, std::ostream& err) {
  const std::string format = format_or(o, "csv", {"csv", "json"});
  if (!o.pbm_dir.empty() && !o.resolution) throw invalid_parameter("--pbm-dir needs --resolution");
  if (o.resolution && !(*o.resolution > 0.0)) throw invalid_parameter("--resolution must be positive");
  const point_cloud cloud = load(o.inputs.at(0), err);
  const double largest = o.radii.empty() ? 0.0 : *std::max_element(o.radii.begin(), o.radii.end());
  const persistence_result result = compute(o, cloud, largest);
  const std::vector<double> radii =
      o.radii.empty() ? default_radii(result.bars, result.critical) : o.radii;
  const std::vector<betti_row> rows = betti_table(result.bars, radii);

  std::vector<topology_signature> oracle;
  if (o.resolution) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double r = rows[i].radius;
      if (r == 0.0) {
        oracle.push_back({cloud.size(), 0});
        continue;
      }
      const bitmap bm = rasterize(cloud, r, std::min(*o.resolution, r / 16.0));
      oracle.push_back(oracle_signature(bm));
      if (!o.pbm_dir.empty()) {
        const auto path = std::filesystem::path(o.pbm_dir) / ("row_" + std::to_string(i) + ".pbm");
        std::ofstream pbm(path, std::ios::binary);
        if (!pbm) throw io_error("cannot write '" + path.string() + "'");
        write_pbm(pbm, bm);
      }
    }
  }

  std::ostringstream text;
  if (format == "csv")
    write_betti_csv(text, rows, oracle);
  else
    text << betti_json(result.bars, rows, oracle).dump(2) << '\n';
  emit(o, out, text.str());
  return exit_ok;
}

inline int cmd_barcode(const cli_options& o, std::ostream& out, std::ostream& err) {
  const std::string format = format_or(o, "csv", {"csv", "json"});
  const point_cloud cloud = load(o.inputs.at(0), err);
  const barcode bars = compute(o, cloud).bars;
  std::ostringstream text;
  if (format == "csv")
    write_barcode_csv(text, bars, o.include_zero_length);
  else
    text << barcode_json(bars, o.include_zero_length).dump(2) << '\n';
  emit(o, out, text.str());
  return exit_ok;
}

inline int cmd_classify(const cli_options& o, std::ostream& out, std::ostream& err) {
  format_or(o, "json", {"json"});
  if (!(o.query_radius >= 0.0)) throw invalid_parameter("--radius must be non-negative");
  if (o.r_max && *o.r_max < o.query_radius)
    throw invalid_parameter("--rmax is below --radius");
  const complex_mode mode = parse_complex_mode(o.mode);

  std::vector<labeled_signature> items;
  bool failed = false;
  for (const auto& path : o.inputs) {
    try {
      const point_cloud cloud = load(path, err);
      const double r_max = o.r_max.value_or(std::max(default_r_max(cloud), o.query_radius));
      items.push_back({path, betti_at(analyze(cloud, mode, r_max).bars, o.query_radius)});
    } catch (const io_error& e) {
      err << "error: " << path << ": " << e.what() << '\n';
      failed = true;
    } catch (const parse_error& e) {
      err << "error: " << path << ": " << e.what() << '\n';
      failed = true;
    }
  }
  emit(o, out, groups_json(group_by_signature(items)).dump(2) + "\n");
  return failed ? exit_parse : exit_ok;
}

inline int cmd_plot(const cli_options& o, std::ostream& out, std::ostream& err) {
  format_or(o, "svg", {"svg"});
  const plot_view view = o.view == "diagram" ? plot_view::diagram : plot_view::barcode;
  const point_cloud cloud = load(o.inputs.at(0), err);
  std::ostringstream text;
  write_svg(text, compute(o, cloud).bars, view, o.include_zero_length);
  emit(o, out, text.str());
  return exit_ok;
}

inline int cmd_generate(const cli_options& o, std::ostream& out, std::ostream&) {
  format_or(o, "csv", {"csv"});
  const point_cloud cloud = generate(parse_shape_kind(o.shape), o.params);
  std::ostringstream text;
  write_cloud_csv(text, cloud.points());
  emit(o, out, text.str());
  return exit_ok;
}

}  // namespace detail

/// Runs one command. Exit codes: 0 success, 2 I/O failure, 3 malformed input
/// (or some classify inputs failed), 4 invalid parameters.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  detail::cli_options o;
  CLI::App app{"Pieces and holes of 2D point clouds across disc radii"};
  app.require_subcommand(1, 1);

  auto add_common = [&o](CLI::App* cmd) {
    cmd->add_option("--mode", o.mode, "Complex: cech or rips")->check(CLI::IsMember({"cech", "rips"}));
    cmd->add_option("--rmax", o.r_max, "Largest disc radius considered (default: automatic)");
    cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
  };

  auto* betti = app.add_subcommand("betti", "Pieces and holes per radius (CSV or JSON)");
  betti->add_option("input", o.inputs, "Point cloud CSV")->required()->expected(1);
  add_common(betti);
  betti->add_option("--radii", o.radii, "Comma-separated radii (default: one per distinct topology)")
      ->delimiter(',');
  betti->add_option("--format", o.format, "csv or json");
  betti->add_option("--resolution", o.resolution,
                    "Also count pieces and holes on a rasterized disc union with this pixel size");
  betti->add_option("--pbm-dir", o.pbm_dir, "Dump each rasterized row as a PBM into this directory");

  auto* barcode_cmd = app.add_subcommand("barcode", "Persistence pairs (CSV or JSON)");
  barcode_cmd->add_option("input", o.inputs, "Point cloud CSV")->required()->expected(1);
  add_common(barcode_cmd);
  barcode_cmd->add_option("--format", o.format, "csv or json");
  barcode_cmd->add_flag("--include-zero-length", o.include_zero_length, "Keep pairs with birth == death");

  auto* classify = app.add_subcommand("classify", "Group clouds by (pieces, holes) at one radius");
  classify->add_option("inputs", o.inputs, "Point cloud CSVs")->required();
  add_common(classify);
  classify->add_option("--radius", o.query_radius, "Disc radius to compare at")->required();
  classify->add_option("--format", o.format, "json");

  auto* plot = app.add_subcommand("plot", "Barcode or persistence diagram as SVG");
  plot->add_option("input", o.inputs, "Point cloud CSV")->required()->expected(1);
  add_common(plot);
  plot->add_option("--view", o.view, "barcode or diagram")->check(CLI::IsMember({"barcode", "diagram"}));
  plot->add_option("--format", o.format, "svg");
  plot->add_flag("--include-zero-length", o.include_zero_length, "Keep pairs with birth == death");

  auto* gen = app.add_subcommand("generate", "Write a synthetic point cloud as CSV");
  gen->add_option("shape", o.shape, "circle, annulus, figure_eight or grid")->required();
  gen->add_option("--n", o.params.count, "Number of points (not grid)");
  gen->add_option("--radius", o.params.radius, "Circle radius / annulus outer radius");
  gen->add_option("--inner", o.params.inner_radius, "Annulus inner radius");
  gen->add_option("--columns", o.params.columns, "Grid columns");
  gen->add_option("--rows", o.params.rows, "Grid rows");
  gen->add_option("--spacing", o.params.spacing, "Grid spacing");
  gen->add_option("--noise", o.params.noise, "Gaussian noise deviation per coordinate");
  gen->add_option("--seed", o.params.seed, "Random seed");
  gen->add_option("--out", o.out, "Write output to this file instead of stdout");
  gen->add_option("--format", o.format, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }

  try {
    if (*betti) return detail::cmd_betti(o, out, err);
    if (*barcode_cmd) return detail::cmd_barcode(o, out, err);
    if (*classify) return detail::cmd_classify(o, out, err);
    if (*plot) return detail::cmd_plot(o, out, err);
    return detail::cmd_generate(o, out, err);
  } catch (const io_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_io;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }
}

}  // namespace dotscape
