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

#ifndef TOURNEY_DATA_CACHE_HPP
#define TOURNEY_DATA_CACHE_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tourney/board.hpp"
#include "tourney/grid.hpp"

namespace tourney {

// Precomputed building blocks (block tours, braid rings) live as text files
// under $TOURNEY_DATA_DIR:
//
//   piece <name> <count>
//   cycle <len> c0 c1 ... c(len-1)     (count lines)
//
// Missing or unreadable files are regenerated by the caller; an unset
// variable disables the disk cache entirely.

inline std::optional<std::filesystem::path> data_dir() {
  const char* dir = std::getenv("TOURNEY_DATA_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

inline std::optional<std::vector<std::vector<Cell>>> load_piece(const std::string& name) {
  const auto dir = data_dir();
  if (!dir) return std::nullopt;
  std::ifstream in(*dir / (name + ".txt"));
  if (!in) return std::nullopt;
  std::string tag, stored_name;
  std::size_t count = 0;
  if (!(in >> tag >> stored_name >> count) || tag != "piece" || stored_name != name) return std::nullopt;
  std::vector<std::vector<Cell>> cycles(count);
  for (auto& cyc : cycles) {
    std::size_t len = 0;
    if (!(in >> tag >> len) || tag != "cycle") return std::nullopt;
    cyc.resize(len);
    for (auto& c : cyc) {
      if (!(in >> c)) return std::nullopt;
    }
  }
  return cycles;
}

/// Best effort: failures to write are ignored, the piece is just recomputed
/// next time.
inline void store_piece(const std::string& name, const std::vector<std::vector<Cell>>& cycles) {
  const auto dir = data_dir();
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  std::ostringstream out;
  out << "piece " << name << ' ' << cycles.size() << '\n';
  for (const auto& cyc : cycles) {
    out << "cycle " << cyc.size();
    for (Cell c : cyc) out << ' ' << c;
    out << '\n';
  }
  const auto tmp = *dir / (name + ".txt.tmp");
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) return;
    f << out.str();
  }
  std::filesystem::rename(tmp, *dir / (name + ".txt"), ec);
}

/// True iff seq visits every cell of grid once and consecutive cells
/// (including last -> first) are knight moves.
inline bool is_closed_tour(const KnightGrid& grid, const std::vector<Cell>& seq) {
  if (static_cast<int>(seq.size()) != grid.cell_count()) return false;
  std::vector<bool> seen(seq.size(), false);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Cell c = seq[i];
    if (c < 0 || c >= grid.cell_count() || seen[static_cast<std::size_t>(c)]) return false;
    seen[static_cast<std::size_t>(c)] = true;
    if (!grid.adjacent(c, seq[(i + 1) % seq.size()])) return false;
  }
  return true;
}

}  // namespace tourney

#endif  // TOURNEY_DATA_CACHE_HPP
