// Copyright 2026 The Tourney Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOURNEY_OUTPUT_HPP
#define TOURNEY_OUTPUT_HPP

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "tourney/cover.hpp"
#include "tourney/error.hpp"
#include "tourney/stats.hpp"

namespace tourney {

inline void save_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIoError, "cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::kIoError, "write failed: " + path.string());
}

inline std::string load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// ---------------------------------------------------------------------------
// SVG

struct SvgOptions {
  int pitch = 16;  // user units per cell
  bool grid = true;
  bool dots = false;
  double stroke_width = 2.0;
};

inline constexpr std::array<std::string_view, 12> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939",
};

namespace detail {
inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}
}  // namespace detail

/// One closed <polygon> per cycle through the cell centres, coloured by
/// cycle index from a fixed palette. Self-contained SVG 1.1.
inline std::string write_svg(const CycleCover& g, const SvgOptions& opt = {}) {
  if (opt.pitch < 1) throw Error(ErrorKind::kInvalidArgument, "svg pitch must be positive");
  const auto cycles = cycles_of(g);
  const int n = g.side();
  const int margin = opt.pitch / 2;
  const int size = n * opt.pitch + 2 * margin;
  const auto centre = [&](int i) { return margin + i * opt.pitch + opt.pitch / 2.0; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(size) +
         "\" height=\"" + std::to_string(size) + "\" viewBox=\"0 0 " + std::to_string(size) + " " +
         std::to_string(size) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(size) + "\" height=\"" + std::to_string(size) +
         "\" fill=\"white\"/>\n";
  if (opt.grid) {
    out += "<g stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
    for (int i = 0; i <= n; ++i) {
      const int p = margin + i * opt.pitch;
      const int lo = margin;
      const int hi = margin + n * opt.pitch;
      out += "<line x1=\"" + std::to_string(p) + "\" y1=\"" + std::to_string(lo) + "\" x2=\"" +
             std::to_string(p) + "\" y2=\"" + std::to_string(hi) + "\"/>\n";
      out += "<line x1=\"" + std::to_string(lo) + "\" y1=\"" + std::to_string(p) + "\" x2=\"" +
             std::to_string(hi) + "\" y2=\"" + std::to_string(p) + "\"/>\n";
    }
    out += "</g>\n";
  }
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    out += "<polygon fill=\"none\" stroke=\"";
    out += kPalette[k % kPalette.size()];
    out += "\" stroke-width=\"" + detail::num(opt.stroke_width) + "\" stroke-linejoin=\"round\" points=\"";
    for (std::size_t i = 0; i < cycles[k].size(); ++i) {
      const Cell c = cycles[k][i];
      if (i) out += ' ';
      out += detail::num(centre(c % n)) + "," + detail::num(centre(c / n));
    }
    out += "\"/>\n";
  }
  if (opt.dots) {
    out += "<g fill=\"black\">\n";
    for (Cell c = 0; c < g.cell_count(); ++c) {
      out += "<circle cx=\"" + detail::num(centre(c % n)) + "\" cy=\"" + detail::num(centre(c / n)) + "\" r=\"" +
             detail::num(opt.pitch / 8.0) + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

// ---------------------------------------------------------------------------
// CSV

struct StatsRow {
  std::string algorithm;
  int n = 0;
  DistributionSummary moves;
  DistributionSummary relative;
};

namespace detail {
inline std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  // -0.000000 would make identical data print differently
  if (std::string_view(buf) == "-0.000000") return "0.000000";
  return buf;
}
}  // namespace detail

inline std::string stats_csv_header() {
  std::string h = "algorithm,n,trials";
  for (const char* prefix : {"f", "sd_f", "r", "sd_r"}) {
    for (int i = 0; i < kMoveCount; ++i) h += std::string(",") + prefix + std::to_string(i);
  }
  return h;
}

inline std::string write_stats_csv(const std::vector<StatsRow>& rows) {
  if (rows.empty()) throw Error(ErrorKind::kEmptySet, "no statistics rows to write");
  std::string out = stats_csv_header() + "\n";
  for (const auto& row : rows) {
    out += row.algorithm + "," + std::to_string(row.n) + "," + std::to_string(row.moves.trials);
    for (const Buckets* b : {&row.moves.mean, &row.moves.stddev, &row.relative.mean, &row.relative.stddev}) {
      for (double v : *b) out += "," + detail::fixed6(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace tourney

#endif  // TOURNEY_OUTPUT_HPP
