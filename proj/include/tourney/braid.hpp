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

#ifndef TOURNEY_BRAID_HPP
#define TOURNEY_BRAID_HPP

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "tourney/config.hpp"
#include "tourney/cover.hpp"
#include "tourney/data_cache.hpp"
#include "tourney/error.hpp"

namespace tourney {

/// Distance from a cell to the nearest board edge, 0 on the border.
inline int ring_depth(const Board& b, Cell c) {
  const int r = b.row(c);
  const int k = b.col(c);
  return std::min({r, k, b.side() - 1 - r, b.side() - 1 - k});
}

namespace detail {

// Exhaustive search for 2-factors of the knight's graph induced on a cell
// subset, visited in a fixed edge order. Returns the first one with exactly
// `want` cycles.
class TwoFactorSearch {
 public:
  TwoFactorSearch(const Board& board, const std::vector<Cell>& cells) : board_(board) {
    std::vector<int> local(static_cast<std::size_t>(board.cell_count()), -1);
    for (std::size_t i = 0; i < cells.size(); ++i) local[static_cast<std::size_t>(cells[i])] = static_cast<int>(i);
    cells_ = cells;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (Cell w : board.neighbors(cells[i])) {
        const int j = local[static_cast<std::size_t>(w)];
        if (j > static_cast<int>(i)) edges_.emplace_back(static_cast<int>(i), j);
      }
    }
    std::sort(edges_.begin(), edges_.end());
    degree_.assign(cells.size(), 0);
    remaining_.assign(cells.size(), 0);
    for (const auto& [a, b] : edges_) {
      ++remaining_[static_cast<std::size_t>(a)];
      ++remaining_[static_cast<std::size_t>(b)];
    }
  }

  std::optional<std::vector<std::vector<Cell>>> find(int want) {
    want_ = want;
    chosen_.clear();
    result_.reset();
    recurse(0);
    return result_;
  }

 private:
  bool feasible(int v) const {
    return degree_[static_cast<std::size_t>(v)] + remaining_[static_cast<std::size_t>(v)] >= 2;
  }

  void recurse(std::size_t k) {
    if (result_) return;
    if (k == edges_.size()) {
      accept();
      return;
    }
    const auto [a, b] = edges_[k];
    auto& da = degree_[static_cast<std::size_t>(a)];
    auto& db = degree_[static_cast<std::size_t>(b)];
    --remaining_[static_cast<std::size_t>(a)];
    --remaining_[static_cast<std::size_t>(b)];
    if (da < 2 && db < 2) {
      ++da;
      ++db;
      chosen_.push_back(k);
      if (feasible(a) && feasible(b)) recurse(k + 1);
      chosen_.pop_back();
      --da;
      --db;
    }
    if (!result_ && feasible(a) && feasible(b)) recurse(k + 1);
    ++remaining_[static_cast<std::size_t>(a)];
    ++remaining_[static_cast<std::size_t>(b)];
  }

  void accept() {
    CycleCover g(board_.side());
    for (std::size_t k : chosen_) g.add_edge(cells_[static_cast<std::size_t>(edges_[k].first)],
                                             cells_[static_cast<std::size_t>(edges_[k].second)]);
    // Only the subset's cells matter; extract cycles by walking them.
    std::vector<std::vector<Cell>> cycles;
    std::vector<bool> seen(static_cast<std::size_t>(board_.cell_count()), false);
    for (Cell s : cells_) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      std::vector<Cell> cyc;
      Cell prev = -1;
      Cell cur = s;
      while (!seen[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = true;
        cyc.push_back(cur);
        const auto nb = g.neighbors(cur);
        const Cell next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
      }
      cycles.push_back(std::move(cyc));
    }
    if (static_cast<int>(cycles.size()) == want_) result_ = std::move(cycles);
  }

  Board board_;
  std::vector<Cell> cells_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> degree_;
  std::vector<int> remaining_;
  std::vector<std::size_t> chosen_;
  int want_ = 0;
  std::optional<std::vector<std::vector<Cell>>> result_;
};

inline std::vector<std::vector<Cell>> cached_piece(const std::string& name, int side,
                                                   const std::vector<Cell>& cells, int want) {
  static std::mutex mu;
  static std::map<std::string, std::vector<std::vector<Cell>>> memo;
  const std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(name); it != memo.end()) return it->second;

  const Board board(side);
  const auto valid = [&](const std::vector<std::vector<Cell>>& cycles) {
    if (static_cast<int>(cycles.size()) != want) return false;
    std::vector<Cell> covered;
    for (const auto& cyc : cycles) {
      if (cyc.size() < 4) return false;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (!board.contains(cyc[i]) || !board.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
        covered.push_back(cyc[i]);
      }
    }
    std::sort(covered.begin(), covered.end());
    return covered == cells;
  };

  std::vector<std::vector<Cell>> cycles;
  if (auto stored = load_piece(name); stored && valid(*stored)) {
    cycles = std::move(*stored);
  } else {
    auto found = TwoFactorSearch(board, cells).find(want);
    if (!found) throw Error(ErrorKind::kBadSize, "no " + std::to_string(want) + "-cycle cover for " + name);
    cycles = std::move(*found);
    store_piece(name, cycles);
  }
  return memo.emplace(name, std::move(cycles)).first->second;
}

}  // namespace detail

/// The four diamond 4-cycles covering a 4 x 4 block, as (row, col) pairs.
inline constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kDiamonds = {{
    {{{0, 0}, {1, 2}, {3, 3}, {2, 1}}},
    {{{0, 1}, {1, 3}, {3, 2}, {2, 0}}},
    {{{0, 2}, {2, 3}, {3, 1}, {1, 0}}},
    {{{0, 3}, {1, 1}, {3, 0}, {2, 2}}},
}};

/// Tiles the board with 4 x 4 blocks of diamonds: n^2 / 4 cycles of length 4.
inline CycleCover four_cover(int n) {
  if (n < 4 || n % 4 != 0) {
    throw Error(ErrorKind::kBadSize, "four-cover needs a side divisible by 4, got " + std::to_string(n));
  }
  std::vector<std::vector<Cell>> cycles;
  for (int r0 = 0; r0 < n; r0 += 4) {
    for (int c0 = 0; c0 < n; c0 += 4) {
      for (const auto& d : kDiamonds) {
        std::vector<Cell> cyc;
        for (const auto& [r, c] : d) cyc.push_back((r0 + r) * n + c0 + c);
        cycles.push_back(std::move(cyc));
      }
    }
  }
  return cover_from_cycles(n, cycles);
}

/// The four interwoven cycles filling the depth-0/1 ring of a side x side
/// board. Within the ring every non-corner cell has exactly two neighbours,
/// so the cover is found by a short exhaustive search (and is unique).
inline const std::vector<std::vector<Cell>>& braid_ring(int side) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<Cell>>> memo;
  {
    const std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(side); it != memo.end()) return it->second;
  }
  const Board b(side);
  std::vector<Cell> cells;
  for (Cell c = 0; c < b.cell_count(); ++c) {
    if (ring_depth(b, c) < 2) cells.push_back(c);
  }
  auto cycles = detail::cached_piece("braid_ring_" + std::to_string(side), side, cells, 4);
  const std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(side, std::move(cycles)).first->second;
}

/// A size-4 cover of the 6 x 6 board, the first in search order.
inline const std::vector<std::vector<Cell>>& braid_center6() {
  static const std::vector<std::vector<Cell>> cover = [] {
    std::vector<Cell> cells(36);
    for (Cell c = 0; c < 36; ++c) cells[static_cast<std::size_t>(c)] = c;
    return detail::cached_piece("braid_center_6", 6, cells, 4);
  }();
  return cover;
}

/// Concentric braided tourney: floor(n/4) - 1 braid rings, each two cells
/// thick and holding four cycles, around an m x m centre (m = 4 + n mod 4)
/// covered by four cycles. Size 4 * floor(n/4).
inline CycleCover braided_tourney(int n) {
  require_even_board(n, 4, "braided tourney");
  const int m = 4 + n % 4;
  const int rings = (n - m) / 4;
  std::vector<std::vector<Cell>> cycles;
  const auto place = [&](const std::vector<std::vector<Cell>>& piece, int side, int offset) {
    for (const auto& cyc : piece) {
      std::vector<Cell> out;
      out.reserve(cyc.size());
      for (Cell c : cyc) out.push_back((offset + c / side) * n + offset + c % side);
      cycles.push_back(std::move(out));
    }
  };
  for (int j = 0; j < rings; ++j) place(braid_ring(n - 4 * j), n - 4 * j, 2 * j);
  const int offset = 2 * rings;
  if (m == 4) {
    for (const auto& d : kDiamonds) {
      std::vector<Cell> cyc;
      for (const auto& [r, c] : d) cyc.push_back((offset + r) * n + offset + c);
      cycles.push_back(std::move(cyc));
    }
  } else {
    place(braid_center6(), 6, offset);
  }
  return cover_from_cycles(n, cycles);
}

}  // namespace tourney

#endif  // TOURNEY_BRAID_HPP
