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

#ifndef TOURNEY_SURGERY_HPP
#define TOURNEY_SURGERY_HPP

#include <cstdint>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tourney/cover.hpp"
#include "tourney/error.hpp"
#include "tourney/rails.hpp"
#include "tourney/rng.hpp"

namespace tourney {

/// A rail whose two parallel edges lie on different cycles.
struct RailLink {
  int a = 0;  // cycle holding (v0, v1)
  int b = 0;  // cycle holding (v2, v3)
  Rail rail;
};

/// Multigraph over the cycles of a tourney, one edge per linking rail.
struct RailGraph {
  int vertex_count = 0;
  std::vector<RailLink> edges;
};

inline RailGraph build_rail_graph(const CycleLabels& labels, const Board& board,
                                  const std::vector<Rail>& rails) {
  RailGraph rg;
  rg.vertex_count = labels.count;
  for (const auto& r : rails) {
    const auto cells = rail_cells(r, board);
    const int a = labels.id[static_cast<std::size_t>(cells[0])];
    const int b = labels.id[static_cast<std::size_t>(cells[2])];
    if (a != b) rg.edges.push_back({a, b, r});
  }
  return rg;
}

inline RailGraph build_rail_graph(const CycleCover& g, const std::vector<Rail>& rails) {
  return build_rail_graph(label_cycles(g), g.board(), rails);
}

/// Breadth-first spanning forest, rooted at the lowest-numbered unvisited
/// cycle of each component. Each forest edge is reported as (parent, child)
/// with the first rail that reached the child.
inline std::vector<RailLink> spanning_forest(const RailGraph& rg) {
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(rg.vertex_count));
  for (std::size_t i = 0; i < rg.edges.size(); ++i) {
    adj[static_cast<std::size_t>(rg.edges[i].a)].emplace_back(rg.edges[i].b, i);
    adj[static_cast<std::size_t>(rg.edges[i].b)].emplace_back(rg.edges[i].a, i);
  }
  std::vector<RailLink> forest;
  std::vector<bool> seen(static_cast<std::size_t>(rg.vertex_count), false);
  std::queue<int> frontier;
  for (int root = 0; root < rg.vertex_count; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = true;
    frontier.push(root);
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      for (const auto& [y, e] : adj[static_cast<std::size_t>(x)]) {
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        forest.push_back({x, y, rg.edges[e].rail});
        frontier.push(y);
      }
    }
  }
  return forest;
}

struct JoinResult {
  CycleCover cover;
  int input_size = 0;
  int output_size = 0;
  std::vector<Rail> switched;
};

/// One round of rail-graph joining. For each spanning-forest edge, a rail
/// linking the same two cycles is drawn uniformly from those still
/// vertex-disjoint from the rails already chosen; edges with no such rail
/// are skipped. Output size is input size minus the number switched.
inline JoinResult join(const CycleCover& g, Rng& rng) {
  const CycleLabels labels = label_cycles(g);
  const auto rails = find_rails(g);
  const RailGraph rg = build_rail_graph(labels, g.board(), rails);
  const auto forest = spanning_forest(rg);

  const auto key = [](int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  };
  std::unordered_map<std::uint64_t, std::vector<Rail>> by_pair;
  if (!forest.empty()) {
    for (const auto& link : rg.edges) by_pair[key(link.a, link.b)].push_back(link.rail);
  }

  JoinResult out{g, labels.count, labels.count, {}};
  std::vector<bool> used(static_cast<std::size_t>(g.cell_count()), false);
  std::vector<Rail> candidates;
  for (const auto& edge : forest) {
    candidates.clear();
    for (const auto& r : by_pair[key(edge.a, edge.b)]) {
      const auto cells = rail_cells(r, g.board());
      bool free = true;
      for (Cell c : cells) free = free && !used[static_cast<std::size_t>(c)];
      if (free) candidates.push_back(r);
    }
    if (candidates.empty()) continue;
    const Rail& pick = candidates[static_cast<std::size_t>(rng.index(candidates.size()))];
    for (Cell c : rail_cells(pick, g.board())) used[static_cast<std::size_t>(c)] = true;
    switch_rail(out.cover, pick);
    out.switched.push_back(pick);
  }
  out.output_size = out.input_size - static_cast<int>(out.switched.size());
  return out;
}

struct JoinOutcome {
  CycleCover cover;
  int size = 0;
  bool reached_tour = false;
  int rounds = 0;
};

inline constexpr int kDefaultJoinRounds = 8;

/// Repeats join until a tour appears, the size stops shrinking, or
/// max_rounds is used up. Returns the smallest cover seen.
inline JoinOutcome join_to_tour(const CycleCover& g, Rng& rng, int max_rounds = kDefaultJoinRounds) {
  if (max_rounds < 1) throw Error(ErrorKind::kInvalidArgument, "max_rounds must be >= 1");
  JoinOutcome best{g, validate(g), false, 0};
  CycleCover cur = g;
  while (best.size > 1 && best.rounds < max_rounds) {
    JoinResult r = join(cur, rng);
    ++best.rounds;
    if (r.switched.empty()) break;
    best.cover = r.cover;
    best.size = r.output_size;
    cur = std::move(r.cover);
  }
  best.reached_tour = best.size == 1;
  return best;
}

/// Greedy maximal vertex-disjoint subset of rails, scanned in random order.
inline std::vector<Rail> choose_disjoint_rails(std::vector<Rail> rails, const Board& board, Rng& rng) {
  rng.shuffle(std::span<Rail>(rails));
  std::vector<bool> used(static_cast<std::size_t>(board.cell_count()), false);
  std::vector<Rail> chosen;
  for (const auto& r : rails) {
    const auto cells = rail_cells(r, board);
    bool free = true;
    for (Cell c : cells) free = free && !used[static_cast<std::size_t>(c)];
    if (!free) continue;
    for (Cell c : cells) used[static_cast<std::size_t>(c)] = true;
    chosen.push_back(r);
  }
  return chosen;
}

struct ShatterResult {
  CycleCover cover;
  std::vector<Rail> rails;     // every rail present before shattering
  std::vector<Rail> switched;  // the disjoint subset that was switched
};

/// Switches a random maximal set of pairwise vertex-disjoint rails. Each
/// switch keeps or splits the cycle it touches, so the size never drops.
inline ShatterResult shatter(const CycleCover& g, Rng& rng) {
  validate(g);
  ShatterResult out{g, find_rails(g), {}};
  out.switched = choose_disjoint_rails(out.rails, g.board(), rng);
  for (const auto& r : out.switched) switch_rail(out.cover, r);
  return out;
}

inline constexpr int kDefaultShatterIters = 16;
inline constexpr int kDefaultObfuscateAttempts = 8;

/// Shatters a tour shatter_iters times, then joins it back into a tour.
/// Attempts that end with more than one cycle are retried from the input
/// on a fresh substream.
inline CycleCover obfuscate(const CycleCover& tour, Rng& rng, int shatter_iters = kDefaultShatterIters,
                            int max_attempts = kDefaultObfuscateAttempts) {
  validate(tour, true);
  if (shatter_iters < 0 || max_attempts < 1) {
    throw Error(ErrorKind::kInvalidArgument, "shatter_iters must be >= 0 and max_attempts >= 1");
  }
  const Rng base(rng.next());
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng sub = base.split(static_cast<std::uint64_t>(attempt));
    CycleCover g = tour;
    for (int i = 0; i < shatter_iters; ++i) g = shatter(g, sub).cover;
    JoinOutcome joined = join_to_tour(g, sub);
    if (!joined.reached_tour) continue;
    if (shatter_iters > 0 && joined.cover == tour) continue;
    return std::move(joined.cover);
  }
  throw Error(ErrorKind::kObfuscationFailed,
              "no tour after " + std::to_string(max_attempts) + " attempts on a " +
                  std::to_string(tour.side()) + "x" + std::to_string(tour.side()) + " board");
}

}  // namespace tourney

#endif  // TOURNEY_SURGERY_HPP
