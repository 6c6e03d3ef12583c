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

#ifndef TOURNEY_GRID_HPP
#define TOURNEY_GRID_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "tourney/board.hpp"

namespace tourney {

/// Precomputed knight neighbourhoods of a width x height rectangle, cells
/// row-major with stride width. Square boards use width == height; the
/// rectangular case backs the tiled blocks.
class KnightGrid {
 public:
  KnightGrid(int width, int height)
      : width_(width), height_(height), nb_(static_cast<std::size_t>(width) * height),
        count_(static_cast<std::size_t>(width) * height, 0) {
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        const auto v = static_cast<std::size_t>(r * width + c);
        for (const auto& [dc, dr] : kDisplacements) {
          const int rr = r + dr;
          const int cc = c + dc;
          if (rr < 0 || rr >= height || cc < 0 || cc >= width) continue;
          nb_[v][count_[v]++] = rr * width + cc;
        }
      }
    }
  }

  explicit KnightGrid(int n) : KnightGrid(n, n) {}

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int cell_count() const noexcept { return width_ * height_; }
  int degree(Cell v) const { return count_[static_cast<std::size_t>(v)]; }
  Cell neighbor(Cell v, int i) const { return nb_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]; }

  bool adjacent(Cell u, Cell v) const {
    for (int i = 0; i < degree(u); ++i) {
      if (neighbor(u, i) == v) return true;
    }
    return false;
  }

 private:
  int width_;
  int height_;
  std::vector<std::array<Cell, kMoveCount>> nb_;
  std::vector<std::uint8_t> count_;
};

}  // namespace tourney

#endif  // TOURNEY_GRID_HPP
