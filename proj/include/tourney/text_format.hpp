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

#ifndef TOURNEY_TEXT_FORMAT_HPP
#define TOURNEY_TEXT_FORMAT_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "tourney/cover.hpp"
#include "tourney/error.hpp"

namespace tourney {

// Canonical text form of a tourney:
//
//   tourney <n> <k>
//   cycle <len> c0 c1 ... c(len-1)      (k lines)
//
// Cells are row-major indices. Each cycle starts at its smallest cell and
// continues to the smaller of that cell's neighbours; cycles are sorted by
// first cell. ASCII, single spaces, LF after every line.

inline std::string write_text(const CycleCover& g) {
  const auto cycles = cycles_of(g);
  std::string out = "tourney " + std::to_string(g.side()) + " " + std::to_string(cycles.size()) + "\n";
  for (const auto& cyc : cycles) {
    out += "cycle ";
    out += std::to_string(cyc.size());
    for (Cell c : cyc) {
      out += ' ';
      out += std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const std::size_t j = line.find(' ', i);
    const std::size_t end = j == std::string_view::npos ? line.size() : j;
    out.push_back(line.substr(i, end - i));
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return out;
}

inline long long parse_int(std::string_view tok, int line) {
  long long v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (tok.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace detail

/// Parses the text form and validates the result as a tourney. Accepts any
/// cycle order and orientation; rejects malformed lines, counts that do
/// not match, repeated cells and illegal moves.
inline CycleCover read_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "empty input");

  const auto header = detail::split_spaces(lines[0]);
  if (header.size() != 3 || header[0] != "tourney") throw ParseError(1, "expected 'tourney <n> <k>'");
  const long long n = detail::parse_int(header[1], 1);
  const long long k = detail::parse_int(header[2], 1);
  if (n < 1 || n > 4096) throw ParseError(1, "board side out of range");
  if (k < 0) throw ParseError(1, "negative cycle count");
  const long long found = static_cast<long long>(lines.size()) - 1;
  if (found != k) {
    // point at the first surplus line, or one past the end if lines are missing
    const int line_no = static_cast<int>(found > k ? k + 2 : found + 2);
    throw ParseError(line_no, "header declares " + std::to_string(k) + " cycles, found " + std::to_string(found));
  }

  const int side = static_cast<int>(n);
  CycleCover g(side);
  std::vector<bool> seen(static_cast<std::size_t>(side) * side, false);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const auto tok = detail::split_spaces(lines[li]);
    if (tok.size() < 2 || tok[0] != "cycle") throw ParseError(line_no, "expected 'cycle <len> ...'");
    const long long len = detail::parse_int(tok[1], line_no);
    if (len < 0 || static_cast<long long>(tok.size()) - 2 != len) {
      throw ParseError(line_no, "cycle length does not match its cell list");
    }
    if (len < 4) throw ParseError(line_no, "cycle shorter than 4 cells");
    std::vector<Cell> cyc;
    cyc.reserve(static_cast<std::size_t>(len));
    for (std::size_t t = 2; t < tok.size(); ++t) {
      const long long c = detail::parse_int(tok[t], line_no);
      if (c < 0 || c >= static_cast<long long>(side) * side) throw ParseError(line_no, "cell out of range");
      if (seen[static_cast<std::size_t>(c)]) throw ParseError(line_no, "cell " + std::to_string(c) + " repeated");
      seen[static_cast<std::size_t>(c)] = true;
      cyc.push_back(static_cast<Cell>(c));
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Cell a = cyc[i];
      const Cell b = cyc[(i + 1) % cyc.size()];
      if (!g.board().adjacent(a, b)) {
        throw ParseError(line_no, "not a knight move: " + std::to_string(a) + "-" + std::to_string(b));
      }
      g.add_edge(a, b);
    }
  }
  validate(g);
  return g;
}

}  // namespace tourney

#endif  // TOURNEY_TEXT_FORMAT_HPP
