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

#ifndef TOURNEY_COVER_HPP
#define TOURNEY_COVER_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tourney/board.hpp"
#include "tourney/error.hpp"

namespace tourney {

using Edge = std::pair<Cell, Cell>;

/// Subgraph of the knight's graph. A tourney when every cell has degree 2.
///
/// Adjacency is one byte per cell: bit i is set iff the edge to
/// dest(v, i) is present, so insert, delete and lookup are all O(1) and
/// every stored edge is a legal knight move by construction.
class CycleCover {
 public:
  CycleCover() = default;
  explicit CycleCover(int n) : board_(n), mask_(static_cast<std::size_t>(n) * n, 0) {}

  const Board& board() const noexcept { return board_; }
  int side() const noexcept { return board_.side(); }
  int cell_count() const noexcept { return board_.cell_count(); }

  std::uint8_t mask(Cell v) const { return mask_[static_cast<std::size_t>(v)]; }
  int degree(Cell v) const { return std::popcount(mask(v)); }

  bool has_edge(Cell u, Cell v) const {
    if (!board_.contains(u) || !board_.contains(v)) return false;
    const auto m = board_.km(u, v);
    return m && (mask(u) >> m->index() & 1U);
  }

  /// Inserts the undirected edge (u, v). Throws IllegalEdge if it is not a
  /// knight move on this board.
  void add_edge(Cell u, Cell v) {
    const Move m = move_between(u, v);
    mask_[static_cast<std::size_t>(u)] |= bit(m);
    mask_[static_cast<std::size_t>(v)] |= bit(m.opposite());
  }

  void remove_edge(Cell u, Cell v) {
    const Move m = move_between(u, v);
    mask_[static_cast<std::size_t>(u)] &= static_cast<std::uint8_t>(~bit(m));
    mask_[static_cast<std::size_t>(v)] &= static_cast<std::uint8_t>(~bit(m.opposite()));
  }

  /// Present neighbours of v, in move order.
  std::vector<Cell> neighbors(Cell v) const {
    std::vector<Cell> out;
    for_each_neighbor(v, [&](Cell w, Move) { out.push_back(w); });
    return out;
  }

  template <typename F>
  void for_each_neighbor(Cell v, F&& f) const {
    for (std::uint8_t m = mask(v); m != 0; m &= static_cast<std::uint8_t>(m - 1)) {
      const Move mv(std::countr_zero(m));
      f(*board_.dest(v, mv), mv);
    }
  }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Cell u = 0; u < cell_count(); ++u) {
      for_each_neighbor(u, [&](Cell v, Move) {
        if (u < v) out.emplace_back(u, v);
      });
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto m : mask_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
  }

  friend bool operator==(const CycleCover&, const CycleCover&) = default;

 private:
  static constexpr std::uint8_t bit(Move m) { return static_cast<std::uint8_t>(1U << m.index()); }

  Move move_between(Cell u, Cell v) const {
    if (!board_.contains(u) || !board_.contains(v)) {
      throw Error(ErrorKind::kIllegalEdge,
                  "cell out of range: " + std::to_string(u) + "-" + std::to_string(v));
    }
    const auto m = board_.km(u, v);
    if (!m) {
      throw Error(ErrorKind::kIllegalEdge,
                  "not a knight move: " + std::to_string(u) + "-" + std::to_string(v));
    }
    return *m;
  }

  Board board_;
  std::vector<std::uint8_t> mask_;
};

/// Builds a cover from closed cell sequences (consecutive cells and the
/// last/first pair become edges).
inline CycleCover cover_from_cycles(int n, std::span<const std::vector<Cell>> cycles) {
  CycleCover g(n);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      g.add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
  }
  return g;
}

inline CycleCover cover_from_cycles(int n, const std::vector<std::vector<Cell>>& cycles) {
  return cover_from_cycles(n, std::span<const std::vector<Cell>>(cycles));
}

inline void require_two_regular(const CycleCover& g) {
  for (Cell v = 0; v < g.cell_count(); ++v) {
    if (g.degree(v) != 2) {
      throw Error(ErrorKind::kNotTwoRegular,
                  "cell " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
}

/// Cycle id of every cell plus the number of cycles. Ids are assigned in
/// order of each cycle's smallest cell.
struct CycleLabels {
  std::vector<int> id;
  int count = 0;
};

inline CycleLabels label_cycles(const CycleCover& g) {
  require_two_regular(g);
  CycleLabels out;
  out.id.assign(static_cast<std::size_t>(g.cell_count()), -1);
  for (Cell s = 0; s < g.cell_count(); ++s) {
    if (out.id[static_cast<std::size_t>(s)] >= 0) continue;
    Cell prev = -1;
    Cell cur = s;
    while (out.id[static_cast<std::size_t>(cur)] < 0) {
      out.id[static_cast<std::size_t>(cur)] = out.count;
      Cell next = -1;
      g.for_each_neighbor(cur, [&](Cell w, Move) {
        if (w != prev && next < 0) next = w;
      });
      prev = cur;
      cur = next;
    }
    ++out.count;
  }
  return out;
}

/// Decomposes a 2-regular cover into its cycles. Each cycle starts at its
/// smallest cell and heads toward the smaller of that cell's two
/// neighbours; cycles are ordered by first cell.
inline std::vector<std::vector<Cell>> cycles_of(const CycleCover& g) {
  require_two_regular(g);
  std::vector<std::vector<Cell>> cycles;
  std::vector<bool> seen(static_cast<std::size_t>(g.cell_count()), false);
  for (Cell s = 0; s < g.cell_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    const auto nb = g.neighbors(s);
    std::vector<Cell> cyc{s};
    seen[static_cast<std::size_t>(s)] = true;
    Cell prev = s;
    Cell cur = std::min(nb[0], nb[1]);
    while (cur != s) {
      cyc.push_back(cur);
      seen[static_cast<std::size_t>(cur)] = true;
      const auto step = g.neighbors(cur);
      const Cell next = step[0] == prev ? step[1] : step[0];
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

/// Checks that g is a tourney and returns its size. With expect_tour the
/// size must also be 1.
inline int validate(const CycleCover& g, bool expect_tour = false) {
  const Board& b = g.board();
  for (Cell v = 0; v < g.cell_count(); ++v) {
    for (int i = 0; i < kMoveCount; ++i) {
      if (!(g.mask(v) >> i & 1U)) continue;
      const auto w = b.dest(v, Move(i));
      if (!w || !(g.mask(*w) >> Move(i).opposite().index() & 1U)) {
        throw Error(ErrorKind::kIllegalEdge, "dangling edge at cell " + std::to_string(v));
      }
    }
  }
  const int k = label_cycles(g).count;
  if (expect_tour && k != 1) {
    throw Error(ErrorKind::kNotConnected, "expected a tour, found " + std::to_string(k) + " cycles");
  }
  return k;
}

}  // namespace tourney

#endif  // TOURNEY_COVER_HPP
