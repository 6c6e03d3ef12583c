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

#ifndef TOURNEY_WARNSDORFF_HPP
#define TOURNEY_WARNSDORFF_HPP

#include <cstdint>
#include <vector>

#include "tourney/config.hpp"
#include "tourney/cover.hpp"
#include "tourney/error.hpp"
#include "tourney/grid.hpp"
#include "tourney/rng.hpp"

namespace tourney {
namespace detail {

// Random walk state shared by the tour and tourney generators. onward_[v]
// is the number of unvisited neighbours of v.
class WarnsdorffWalk {
 public:
  explicit WarnsdorffWalk(int n) : grid_(n) { reset(); }

  const KnightGrid& grid() const { return grid_; }

  void reset() {
    const auto size = static_cast<std::size_t>(grid_.cell_count());
    visited_.assign(size, 0);
    onward_.resize(size);
    free_.resize(size);
    slot_.resize(size);
    for (Cell v = 0; v < grid_.cell_count(); ++v) {
      onward_[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(grid_.degree(v));
      free_[static_cast<std::size_t>(v)] = v;
      slot_[static_cast<std::size_t>(v)] = v;
    }
  }

  bool visited(Cell v) const { return visited_[static_cast<std::size_t>(v)] != 0; }
  std::size_t unvisited_count() const { return free_.size(); }
  Cell random_unvisited(Rng& rng) const { return free_[static_cast<std::size_t>(rng.index(free_.size()))]; }

  void visit(Cell v) {
    visited_[static_cast<std::size_t>(v)] = 1;
    for (int i = 0; i < grid_.degree(v); ++i) --onward_[static_cast<std::size_t>(grid_.neighbor(v, i))];
    // swap-remove from the free list
    const auto s = static_cast<std::size_t>(slot_[static_cast<std::size_t>(v)]);
    const Cell last = free_.back();
    free_[s] = last;
    slot_[static_cast<std::size_t>(last)] = static_cast<Cell>(s);
    free_.pop_back();
  }

  void unvisit(Cell v) {
    visited_[static_cast<std::size_t>(v)] = 0;
    for (int i = 0; i < grid_.degree(v); ++i) ++onward_[static_cast<std::size_t>(grid_.neighbor(v, i))];
    slot_[static_cast<std::size_t>(v)] = static_cast<Cell>(free_.size());
    free_.push_back(v);
  }

  /// Warnsdorff step: uniformly among unvisited neighbours with the fewest
  /// unvisited neighbours of their own. Returns -1 at a dead end.
  Cell step(Cell from, Rng& rng) const {
    int best = kMoveCount + 1;
    int ties = 0;
    Cell pick = -1;
    for (int i = 0; i < grid_.degree(from); ++i) {
      const Cell w = grid_.neighbor(from, i);
      if (visited(w)) continue;
      const int d = onward_[static_cast<std::size_t>(w)];
      if (d < best) {
        best = d;
        ties = 1;
        pick = w;
      } else if (d == best) {
        ++ties;
        // reservoir sampling keeps the choice uniform over the ties
        if (rng.below(static_cast<std::uint64_t>(ties)) == 0) pick = w;
      }
    }
    return pick;
  }

  int onward(Cell v) const { return onward_[static_cast<std::size_t>(v)]; }

  /// Walks from start until stuck; the walk includes start.
  std::vector<Cell> walk_from(Cell start, Rng& rng) {
    std::vector<Cell> path{start};
    visit(start);
    for (Cell cur = step(start, rng); cur >= 0; cur = step(cur, rng)) {
      visit(cur);
      path.push_back(cur);
    }
    return path;
  }

  /// Walk for a closed tour. Gives up as soon as the start has no unvisited
  /// neighbour left while other cells remain, since the tour can then no
  /// longer close; returns false in that case or when the walk dead-ends.
  bool tour_from(Cell start, Rng& rng, std::vector<Cell>& path) {
    path.assign(1, start);
    visit(start);
    for (Cell cur = step(start, rng); cur >= 0; cur = step(cur, rng)) {
      visit(cur);
      path.push_back(cur);
      if (onward(start) == 0 && unvisited_count() > 0) return false;
    }
    return unvisited_count() == 0 && grid_.adjacent(path.back(), start);
  }

 private:
  KnightGrid grid_;
  std::vector<std::uint8_t> visited_;
  std::vector<std::int8_t> onward_;
  std::vector<Cell> free_;
  std::vector<Cell> slot_;
};

}  // namespace detail

/// Closed tour by restarting Warnsdorff random walks until one visits every
/// cell and ends a knight's move from where it began.
inline CycleCover warnsdorff_tour(const GeneratorConfig& cfg) {
  require_even_board(cfg.n, 6, "warnsdorff tour");
  Rng rng(cfg.seed);
  detail::WarnsdorffWalk walk(cfg.n);
  std::vector<Cell> path;
  for (int attempt = 0; attempt < cfg.attempt_cap; ++attempt) {
    walk.reset();
    const Cell start = walk.random_unvisited(rng);
    if (walk.tour_from(start, rng, path)) {
      return cover_from_cycles(cfg.n, std::vector<std::vector<Cell>>{std::move(path)});
    }
  }
  throw Error(ErrorKind::kAttemptsExhausted,
              "warnsdorff tour: no closed tour in " + std::to_string(cfg.attempt_cap) + " attempts");
}

/// Tourney by Warnsdorff walks that are closed off into cycles instead of
/// being thrown away. Each walk runs to a dead end, then is cut back to the
/// last cell (at least the fourth) that is a knight's move from its start
/// and closed there; the cut-off tail is released and a fresh walk begins at
/// a random unvisited cell. A walk with no such cell restarts the attempt.
inline CycleCover warnsdorff_tourney(const GeneratorConfig& cfg) {
  require_even_board(cfg.n, 6, "warnsdorff tourney");
  Rng rng(cfg.seed);
  detail::WarnsdorffWalk walk(cfg.n);
  std::vector<std::vector<Cell>> cycles;
  for (int attempt = 0; attempt < cfg.attempt_cap; ++attempt) {
    walk.reset();
    cycles.clear();
    bool ok = true;
    while (ok && walk.unvisited_count() > 0) {
      const Cell start = walk.random_unvisited(rng);
      auto path = walk.walk_from(start, rng);
      std::size_t end = path.size();
      while (end >= 4 && !walk.grid().adjacent(path[end - 1], start)) --end;
      ok = end >= 4;
      if (!ok) break;
      while (path.size() > end) {
        walk.unvisit(path.back());
        path.pop_back();
      }
      cycles.push_back(std::move(path));
    }
    if (ok) return cover_from_cycles(cfg.n, cycles);
  }
  throw Error(ErrorKind::kAttemptsExhausted,
              "warnsdorff tourney: no cover in " + std::to_string(cfg.attempt_cap) + " attempts");
}

}  // namespace tourney

#endif  // TOURNEY_WARNSDORFF_HPP
