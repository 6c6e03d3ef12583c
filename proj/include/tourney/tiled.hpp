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

#ifndef TOURNEY_TILED_HPP
#define TOURNEY_TILED_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "tourney/config.hpp"
#include "tourney/cover.hpp"
#include "tourney/data_cache.hpp"
#include "tourney/error.hpp"
#include "tourney/grid.hpp"
#include "tourney/rng.hpp"
#include "tourney/surgery.hpp"

namespace tourney {
namespace detail {

// Depth-first search for a closed tour of a width x height block starting
// at its top-left corner. Children are tried in increasing onward degree
// (Warnsdorff order), ties in move order, so the result is deterministic.
class ClosedTourSearch {
 public:
  ClosedTourSearch(int width, int height)
      : grid_(width, height), onward_(static_cast<std::size_t>(grid_.cell_count())),
        visited_(static_cast<std::size_t>(grid_.cell_count()), 0) {
    for (Cell v = 0; v < grid_.cell_count(); ++v) {
      onward_[static_cast<std::size_t>(v)] = grid_.degree(v);
    }
  }

  std::vector<Cell> run() {
    path_.clear();
    visit(0);
    path_.push_back(0);
    if (!extend()) return {};
    return path_;
  }

 private:
  bool extend() {
    const Cell cur = path_.back();
    if (static_cast<int>(path_.size()) == grid_.cell_count()) return grid_.adjacent(cur, 0);
    // The start must keep a free neighbour to close into.
    if (onward_[0] == 0) return false;

    std::array<std::pair<int, Cell>, kMoveCount> order{};
    int count = 0;
    for (int i = 0; i < grid_.degree(cur); ++i) {
      const Cell w = grid_.neighbor(cur, i);
      if (!visited_[static_cast<std::size_t>(w)]) order[static_cast<std::size_t>(count++)] = {onward_[static_cast<std::size_t>(w)], i};
    }
    std::stable_sort(order.begin(), order.begin() + count,
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int k = 0; k < count; ++k) {
      const Cell w = grid_.neighbor(cur, order[static_cast<std::size_t>(k)].second);
      visit(w);
      path_.push_back(w);
      if (extend()) return true;
      path_.pop_back();
      unvisit(w);
    }
    return false;
  }

  void visit(Cell v) {
    visited_[static_cast<std::size_t>(v)] = 1;
    for (int i = 0; i < grid_.degree(v); ++i) --onward_[static_cast<std::size_t>(grid_.neighbor(v, i))];
  }

  void unvisit(Cell v) {
    visited_[static_cast<std::size_t>(v)] = 0;
    for (int i = 0; i < grid_.degree(v); ++i) ++onward_[static_cast<std::size_t>(grid_.neighbor(v, i))];
  }

  KnightGrid grid_;
  std::vector<int> onward_;
  std::vector<std::uint8_t> visited_;
  std::vector<Cell> path_;
};

}  // namespace detail

inline bool is_block_side(int s) { return s == 6 || s == 8 || s == 10; }

/// Closed tour of a width x height block, as a cell sequence in block-local
/// row-major order (stride width). Found once per shape, then served from
/// memory and, when TOURNEY_DATA_DIR is set, from disk.
inline const std::vector<Cell>& base_tour(int width, int height) {
  if (!is_block_side(width) || !is_block_side(height)) {
    throw Error(ErrorKind::kBadSize, "base tours exist for sides 6, 8, 10 only");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Cell>> cache;
  const std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({width, height});
  if (it != cache.end()) return it->second;

  const std::string name = "base_" + std::to_string(width) + "x" + std::to_string(height);
  const KnightGrid grid(width, height);
  std::vector<Cell> tour;
  if (auto stored = load_piece(name); stored && stored->size() == 1 &&
      is_closed_tour(grid, stored->front())) {
    tour = std::move(stored->front());
  } else {
    tour = detail::ClosedTourSearch(width, height).run();
    store_piece(name, {tour});
  }
  return cache.emplace(std::make_pair(width, height), std::move(tour)).first->second;
}

/// Splits an even n >= 6 into block sides from {6, 8, 10}: all 6s, or one
/// 8 (n = 2 mod 6) or one 10 (n = 4 mod 6) followed by 6s.
inline std::vector<int> tile_partition(int n) {
  require_even_board(n, 6, "tiled tourney");
  std::vector<int> parts;
  int rest = n;
  if (n % 6 == 2) {
    parts.push_back(8);
    rest -= 8;
  } else if (n % 6 == 4) {
    parts.push_back(10);
    rest -= 10;
  }
  for (; rest > 0; rest -= 6) parts.push_back(6);
  return parts;
}

/// Board tiled by closed block tours, one cycle per block.
inline CycleCover tiled_tourney(int n) {
  const auto parts = tile_partition(n);
  std::vector<std::vector<Cell>> cycles;
  int row0 = 0;
  for (int h : parts) {
    int col0 = 0;
    for (int w : parts) {
      const auto& local = base_tour(w, h);
      std::vector<Cell> cyc;
      cyc.reserve(local.size());
      for (Cell c : local) cyc.push_back((row0 + c / w) * n + col0 + c % w);
      cycles.push_back(std::move(cyc));
      col0 += w;
    }
    row0 += h;
  }
  return cover_from_cycles(n, cycles);
}

/// Tiled tourney joined into a closed tour. Throws ObfuscationFailed if the
/// join rounds run out first.
inline CycleCover dc_tour(int n, Rng& rng, int max_rounds = kDefaultJoinRounds) {
  JoinOutcome out = join_to_tour(tiled_tourney(n), rng, max_rounds);
  if (!out.reached_tour) {
    throw Error(ErrorKind::kObfuscationFailed,
                "tiled tourney of side " + std::to_string(n) + " joined only to " + std::to_string(out.size) + " cycles");
  }
  return std::move(out.cover);
}

}  // namespace tourney

#endif  // TOURNEY_TILED_HPP
