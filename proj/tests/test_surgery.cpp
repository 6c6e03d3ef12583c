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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tourney/tourney.hpp"

namespace tourney {
namespace {

RailGraph graph_of(int vertices, const std::vector<std::pair<int, int>>& links) {
  RailGraph rg;
  rg.vertex_count = vertices;
  for (const auto& [a, b] : links) rg.edges.push_back({a, b, Rail(0, Move(6), Move(7))});
  return rg;
}

TEST(RailGraph, Examples) {
  const CycleCover tiled = tiled_tourney(12);
  const RailGraph rg = build_rail_graph(tiled, find_rails(tiled));
  EXPECT_EQ(rg.vertex_count, 4);
  EXPECT_GE(rg.edges.size(), 3U);
  const CycleLabels labels = label_cycles(tiled);
  for (const auto& e : rg.edges) {
    EXPECT_NE(e.a, e.b);
    const auto cells = rail_cells(e.rail, tiled.board());
    EXPECT_EQ(labels.id[static_cast<std::size_t>(cells[0])], e.a);
    EXPECT_EQ(labels.id[static_cast<std::size_t>(cells[1])], e.a);
    EXPECT_EQ(labels.id[static_cast<std::size_t>(cells[2])], e.b);
    EXPECT_EQ(labels.id[static_cast<std::size_t>(cells[3])], e.b);
  }

  Rng rng(4);
  const CycleCover tour = dc_tour(12, rng);
  const RailGraph one = build_rail_graph(tour, find_rails(tour));
  EXPECT_EQ(one.vertex_count, 1);
  EXPECT_TRUE(one.edges.empty());

  const CycleCover diamonds = four_cover(4);
  const RailGraph none = build_rail_graph(diamonds, find_rails(diamonds));
  EXPECT_EQ(none.vertex_count, 4);
  EXPECT_TRUE(none.edges.empty());
}

TEST(SpanningForest, Examples) {
  EXPECT_EQ(spanning_forest(graph_of(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {2, 5}})).size(), 6U);
  EXPECT_TRUE(spanning_forest(graph_of(5, {})).empty());
  EXPECT_EQ(spanning_forest(graph_of(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}})).size(), 3U);
}

TEST(SpanningForest, BreadthFirstFromLowestRoot) {
  const auto forest = spanning_forest(graph_of(4, {{3, 2}, {0, 3}, {0, 1}, {1, 2}}));
  ASSERT_EQ(forest.size(), 3U);
  EXPECT_EQ(std::make_pair(forest[0].a, forest[0].b), std::make_pair(0, 3));
  EXPECT_EQ(std::make_pair(forest[1].a, forest[1].b), std::make_pair(0, 1));
  EXPECT_EQ(std::make_pair(forest[2].a, forest[2].b), std::make_pair(3, 2));
}

TEST(Join, TiledTwelveBecomesTour) {
  Rng rng(0);
  const JoinResult r = join(tiled_tourney(12), rng);
  EXPECT_EQ(r.input_size, 4);
  EXPECT_EQ(r.output_size, 1);
  EXPECT_EQ(validate(r.cover, true), 1);
}

TEST(Join, TourUnchanged) {
  Rng rng(1);
  const CycleCover t = dc_tour(14, rng);
  const JoinResult r = join(t, rng);
  EXPECT_TRUE(r.switched.empty());
  EXPECT_EQ(r.cover, t);
}

TEST(Join, TiledTwentyTwoBecomesTour) {
  Rng rng(5);
  const JoinOutcome out = join_to_tour(tiled_tourney(22), rng);
  EXPECT_TRUE(out.reached_tour);
  EXPECT_EQ(validate(out.cover, true), 1);
}

TEST(Join, SizeLawAndDisjointness) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratorConfig cfg;
    cfg.n = 8 + 2 * static_cast<int>(seed % 8);
    cfg.seed = seed;
    CycleCover g = warnsdorff_tourney(cfg);
    Rng rng(seed);
    for (int round = 0; round < 4; ++round) {
      const JoinResult r = join(g, rng);
      ASSERT_EQ(r.input_size, validate(g));
      ASSERT_EQ(validate(r.cover), r.input_size - static_cast<int>(r.switched.size()));
      EXPECT_EQ(r.output_size, validate(r.cover));
      std::set<Cell> used;
      for (const auto& rail : r.switched) {
        for (Cell c : rail_cells(rail, g.board())) EXPECT_TRUE(used.insert(c).second);
      }
      g = r.cover;
    }
  }
}

TEST(Join, ToTourExamples) {
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    Rng rng(seed);
    const JoinOutcome b = join_to_tour(braided_tourney(16), rng);
    EXPECT_TRUE(b.reached_tour) << "braid seed " << seed;
    EXPECT_LE(b.rounds, kDefaultJoinRounds);
  }
  Rng rng(3);
  EXPECT_EQ(validate(join_to_tour(four_cover(16), rng).cover, true), 1);

  const JoinOutcome d = join_to_tour(four_cover(4), rng);
  EXPECT_FALSE(d.reached_tour);
  EXPECT_EQ(d.size, 4);
  EXPECT_EQ(d.cover, four_cover(4));
  EXPECT_THROW(join_to_tour(four_cover(4), rng, 0), Error);
}

TEST(Join, RejectsNonCovers) {
  CycleCover g(8);
  g.add_edge(0, 17);
  Rng rng(0);
  EXPECT_THROW(join(g, rng), Error);
}

TEST(Switch, DisjointSwitchesCommute) {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    GeneratorConfig cfg;
    cfg.n = 8 + 2 * (trial % 4);
    cfg.seed = static_cast<std::uint64_t>(trial);
    const CycleCover g = warnsdorff_tourney(cfg);
    auto chosen = choose_disjoint_rails(find_rails(g), g.board(), rng);
    CycleCover a = g;
    for (const auto& r : chosen) switch_rail(a, r);
    for (int perm = 0; perm < 3; ++perm) {
      rng.shuffle(std::span(chosen));
      CycleCover b = g;
      for (const auto& r : chosen) switch_rail(b, r);
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Shatter, ValidAndMaximal) {
  Rng gen(100);
  const CycleCover t = dc_tour(32, gen);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const ShatterResult s = shatter(t, rng);
    EXPECT_GE(validate(s.cover), 1);
    std::vector<bool> used(static_cast<std::size_t>(t.cell_count()), false);
    for (const auto& r : s.switched) {
      for (Cell c : rail_cells(r, t.board())) used[static_cast<std::size_t>(c)] = true;
    }
    for (const auto& r : s.rails) {
      bool touches = false;
      for (Cell c : rail_cells(r, t.board())) touches = touches || used[static_cast<std::size_t>(c)];
      EXPECT_TRUE(touches) << "rail left out of a maximal set";
    }
  }
}

TEST(Shatter, StepwiseCycleCounts) {
  // Switching the pass's rails one at a time: each step splits, keeps or
  // merges exactly one pair of cycles.
  Rng gen(6);
  CycleCover g = dc_tour(20, gen);
  Rng rng(6);
  for (int i = 0; i < 16; ++i) {
    const ShatterResult s = shatter(g, rng);
    CycleCover h = g;
    int k = validate(h);
    for (const auto& r : s.switched) {
      switch_rail(h, r);
      const int next = validate(h);
      EXPECT_LE(std::abs(next - k), 1);
      k = next;
    }
    EXPECT_EQ(h, s.cover);
    g = s.cover;
  }
  EXPECT_GT(validate(g), 1);
}

TEST(Shatter, RailFreeInputUnchanged) {
  Rng rng(0);
  const CycleCover g = four_cover(8);
  if (find_rails(g).empty()) {
    EXPECT_EQ(shatter(g, rng).cover, g);
  }
  const CycleCover d = four_cover(4);
  EXPECT_EQ(shatter(d, rng).cover, d);
}

TEST(Obfuscate, DcThirtyTwo) {
  Rng gen(1);
  const CycleCover t = dc_tour(32, gen);
  Rng rng(1);
  const CycleCover o = obfuscate(t, rng);
  EXPECT_EQ(validate(o, true), 1);
  EXPECT_NE(write_text(o), write_text(t));
}

TEST(Obfuscate, ZeroItersIsIdentity) {
  Rng gen(2);
  const CycleCover t = dc_tour(16, gen);
  Rng rng(2);
  EXPECT_EQ(obfuscate(t, rng, 0), t);
}

TEST(Obfuscate, RejectsTourneysAndBadArguments) {
  Rng rng(0);
  EXPECT_THROW(obfuscate(tiled_tourney(12), rng), Error);
  Rng gen(2);
  const CycleCover t = dc_tour(12, gen);
  EXPECT_THROW(obfuscate(t, rng, -1), Error);
  EXPECT_THROW(obfuscate(t, rng, 16, 0), Error);
}

TEST(Obfuscate, Deterministic) {
  Rng gen(9);
  const CycleCover t = dc_tour(24, gen);
  Rng a(77), b(77);
  EXPECT_EQ(write_text(obfuscate(t, a)), write_text(obfuscate(t, b)));
}

}  // namespace
}  // namespace tourney
