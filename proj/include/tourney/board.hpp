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

#ifndef TOURNEY_BOARD_HPP
#define TOURNEY_BOARD_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tourney/error.hpp"

namespace tourney {

/// Cells are row-major indices: cell i sits at row i / n, column i % n.
using Cell = std::int32_t;

/// One of the eight knight displacements, numbered counterclockwise.
/// Moves 0-3 go up the board (negative row delta), moves 4-7 go down.
class Move {
 public:
  constexpr Move() = default;
  constexpr explicit Move(int index) : index_(static_cast<std::uint8_t>(index & 7)) {}

  constexpr int index() const noexcept { return index_; }
  constexpr Move opposite() const noexcept { return Move(index_ + 4); }
  constexpr bool is_downward() const noexcept { return index_ >= 4; }

  friend constexpr bool operator==(Move, Move) = default;
  friend constexpr auto operator<=>(Move, Move) = default;

 private:
  std::uint8_t index_ = 0;
};

inline constexpr int kMoveCount = 8;

struct Displacement {
  int dcol;
  int drow;
};

inline constexpr std::array<Displacement, kMoveCount> kDisplacements = {{
    {+2, -1}, {+1, -2}, {-1, -2}, {-2, -1},
    {-2, +1}, {-1, +2}, {+1, +2}, {+2, +1},
}};

constexpr Displacement displacement(Move m) noexcept {
  return kDisplacements[static_cast<std::size_t>(m.index())];
}

/// (i - j) mod 8: the move j expressed relative to the preceding move i.
constexpr Move rel(Move i, Move j) noexcept { return Move(i.index() - j.index() + 8); }

/// Square board of side n.
class Board {
 public:
  constexpr Board() = default;
  constexpr explicit Board(int n) : n_(n) {
    if (n < 1) throw Error(ErrorKind::kBadSize, "board side must be positive");
  }

  constexpr int side() const noexcept { return n_; }
  constexpr int cell_count() const noexcept { return n_ * n_; }
  constexpr int row(Cell c) const noexcept { return c / n_; }
  constexpr int col(Cell c) const noexcept { return c % n_; }
  constexpr Cell cell_at(int row, int col) const noexcept { return row * n_ + col; }
  constexpr bool contains(Cell c) const noexcept { return c >= 0 && c < n_ * n_; }
  constexpr bool on_board(int row, int col) const noexcept {
    return row >= 0 && row < n_ && col >= 0 && col < n_;
  }

  /// Cell reached by move m from c, if it stays on the board.
  constexpr std::optional<Cell> dest(Cell c, Move m) const noexcept {
    const auto [dc, dr] = displacement(m);
    const int r = row(c) + dr;
    const int k = col(c) + dc;
    if (!on_board(r, k)) return std::nullopt;
    return cell_at(r, k);
  }

  /// The move taking a knight from u to v, if there is one.
  constexpr std::optional<Move> km(Cell u, Cell v) const noexcept {
    const int dr = row(v) - row(u);
    const int dc = col(v) - col(u);
    for (int i = 0; i < kMoveCount; ++i) {
      if (kDisplacements[i].dcol == dc && kDisplacements[i].drow == dr) return Move(i);
    }
    return std::nullopt;
  }

  constexpr bool adjacent(Cell u, Cell v) const noexcept { return km(u, v).has_value(); }

  /// Neighbours of v in the knight's graph, in move order.
  std::vector<Cell> neighbors(Cell v) const {
    std::vector<Cell> out;
    out.reserve(kMoveCount);
    for (int i = 0; i < kMoveCount; ++i) {
      if (auto d = dest(v, Move(i))) out.push_back(*d);
    }
    return out;
  }

  int degree(Cell v) const noexcept {
    int d = 0;
    for (int i = 0; i < kMoveCount; ++i) d += dest(v, Move(i)).has_value();
    return d;
  }

  friend constexpr bool operator==(Board, Board) = default;

 private:
  int n_ = 0;
};

/// Free-function spellings of the board primitives.
constexpr std::optional<Cell> dest(Cell v, Move i, int n) { return Board(n).dest(v, i); }
constexpr std::optional<Move> km(Cell u, Cell v, int n) { return Board(n).km(u, v); }
inline std::vector<Cell> neighbors(Cell v, int n) { return Board(n).neighbors(v); }

/// Number of undirected edges of the n x n knight's graph.
inline long long edge_count(int n) {
  const Board b(n);
  long long degree_sum = 0;
  for (Cell v = 0; v < b.cell_count(); ++v) degree_sum += b.degree(v);
  return degree_sum / 2;
}

}  // namespace tourney

#endif  // TOURNEY_BOARD_HPP
