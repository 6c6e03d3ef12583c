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

#ifndef TOURNEY_RAILS_HPP
#define TOURNEY_RAILS_HPP

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "tourney/board.hpp"
#include "tourney/cover.hpp"
#include "tourney/error.hpp"

namespace tourney {

/// Two parallel edges (the primary move) joined at both ends by two absent
/// edges (the cross move). Identified by its topmost cell; both moves are
/// downward.
class Rail {
 public:
  Rail(Cell top, Move primary, Move cross) : top_(top), primary_(primary), cross_(cross) {
    if (!primary.is_downward() || !cross.is_downward() || primary == cross) {
      throw Error(ErrorKind::kInvalidArgument,
                  "rail moves must be distinct downward moves, got " +
                      std::to_string(primary.index()) + "/" + std::to_string(cross.index()));
    }
  }

  Cell top() const noexcept { return top_; }
  Move primary() const noexcept { return primary_; }
  Move cross() const noexcept { return cross_; }

  /// The same four cells with the roles of the two edge pairs exchanged.
  /// After a switch, this is the rail that undoes it.
  Rail mirrored() const { return Rail(top_, cross_, primary_); }

  friend bool operator==(const Rail&, const Rail&) = default;
  friend auto operator<=>(const Rail& a, const Rail& b) {
    if (auto c = a.top_ <=> b.top_; c != 0) return c;
    if (auto c = a.primary_ <=> b.primary_; c != 0) return c;
    return a.cross_ <=> b.cross_;
  }

 private:
  Cell top_;
  Move primary_;
  Move cross_;
};

/// v0 = top, v1 = dest(v0, primary), v2 = dest(v0, cross), v3 = dest(v1, cross).
/// Parallel edges are (v0, v1) and (v2, v3); cross edges (v0, v2) and (v1, v3).
using RailCells = std::array<Cell, 4>;

inline RailCells rail_cells(const Rail& r, const Board& b) {
  if (!b.contains(r.top())) throw Error(ErrorKind::kOffBoard, "rail top outside board");
  const auto v1 = b.dest(r.top(), r.primary());
  const auto v2 = b.dest(r.top(), r.cross());
  const auto v3 = v1 ? b.dest(*v1, r.cross()) : std::nullopt;
  if (!v1 || !v2 || !v3) {
    throw Error(ErrorKind::kOffBoard, "rail at cell " + std::to_string(r.top()) + " leaves the board");
  }
  return {r.top(), *v1, *v2, *v3};
}

inline RailCells rail_cells(const Rail& r, int n) { return rail_cells(r, Board(n)); }

inline bool is_rail_present(const CycleCover& g, const Rail& r) {
  const auto [v0, v1, v2, v3] = rail_cells(r, g.board());
  return g.has_edge(v0, v1) && g.has_edge(v2, v3) && !g.has_edge(v0, v2) && !g.has_edge(v1, v3);
}

/// Every rail present in g, each reported once from its topmost cell, in
/// (top, primary, cross) order. One pass over the cells with at most 4 x 3
/// candidates each.
inline std::vector<Rail> find_rails(const CycleCover& g) {
  const Board& b = g.board();
  std::vector<Rail> rails;
  for (Cell u = 0; u < g.cell_count(); ++u) {
    for (int p = 4; p < kMoveCount; ++p) {
      if (!(g.mask(u) >> p & 1U)) continue;
      const Cell v = *b.dest(u, Move(p));
      for (int j = 4; j < kMoveCount; ++j) {
        if (j == p) continue;
        const auto u2 = b.dest(u, Move(j));
        const auto v2 = b.dest(v, Move(j));
        if (!u2 || !v2) continue;
        // e' = (u2, v2) is a primary-move edge; the cross edges are move j.
        if ((g.mask(*u2) >> p & 1U) && !(g.mask(u) >> j & 1U) && !(g.mask(v) >> j & 1U)) {
          rails.emplace_back(u, Move(p), Move(j));
        }
      }
    }
  }
  return rails;
}

inline bool rail_has_parallel_edge(const Rail& r, const Board& b, Cell a, Cell c) {
  const auto [v0, v1, v2, v3] = rail_cells(r, b);
  const auto same = [&](Cell x, Cell y) { return (x == a && y == c) || (x == c && y == a); };
  return same(v0, v1) || same(v2, v3);
}

/// Rails whose parallel pair includes the edge e. At most 6 for any edge.
inline std::vector<Rail> rails_containing_edge(const std::vector<Rail>& rails, const Board& b,
                                               const Edge& e) {
  std::vector<Rail> out;
  for (const auto& r : rails) {
    if (rail_has_parallel_edge(r, b, e.first, e.second)) out.push_back(r);
  }
  return out;
}

/// Replaces the rail's parallel edges with its cross edges. Degrees are
/// unchanged.
inline void switch_rail(CycleCover& g, const Rail& r) {
  if (!is_rail_present(g, r)) {
    throw Error(ErrorKind::kRailNotPresent, "no rail at cell " + std::to_string(r.top()));
  }
  const auto [v0, v1, v2, v3] = rail_cells(r, g.board());
  g.remove_edge(v0, v1);
  g.remove_edge(v2, v3);
  g.add_edge(v0, v2);
  g.add_edge(v1, v3);
}

}  // namespace tourney

#endif  // TOURNEY_RAILS_HPP
