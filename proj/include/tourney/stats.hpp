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

#ifndef TOURNEY_STATS_HPP
#define TOURNEY_STATS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "tourney/cover.hpp"
#include "tourney/error.hpp"
#include "tourney/rails.hpp"

namespace tourney {

using Buckets = std::array<double, kMoveCount>;
using BucketCounts = std::array<std::int64_t, kMoveCount>;

/// f_i: fraction of edge ends realising move i. Each undirected edge adds
/// one to km(u, v) and one to km(v, u), so f_i == f_{i+4}.
struct MoveDistribution {
  BucketCounts counts{};
  Buckets freq{};
};

/// r_i: fraction of consecutive move pairs whose second move is i steps
/// (mod 8) from the first, counted once per direction through every cell.
/// r_4 is always zero and r_i == r_{8-i}.
struct RelativeMoveDistribution {
  BucketCounts counts{};
  Buckets freq{};
};

namespace detail {
inline Buckets normalise(const BucketCounts& counts, int n) {
  Buckets out{};
  const double denom = 2.0 * n * n;
  for (int i = 0; i < kMoveCount; ++i) out[static_cast<std::size_t>(i)] = static_cast<double>(counts[static_cast<std::size_t>(i)]) / denom;
  return out;
}
}  // namespace detail

inline MoveDistribution move_distribution(const CycleCover& t) {
  validate(t);
  MoveDistribution d;
  for (Cell u = 0; u < t.cell_count(); ++u) {
    // Each cell sees both of its edges, which covers every edge from both
    // ends: exactly the km(u,v) and km(v,u) increments.
    t.for_each_neighbor(u, [&](Cell, Move m) { ++d.counts[static_cast<std::size_t>(m.index())]; });
  }
  d.freq = detail::normalise(d.counts, t.side());
  return d;
}

inline RelativeMoveDistribution relative_move_distribution(const CycleCover& t) {
  validate(t);
  RelativeMoveDistribution d;
  const Board& b = t.board();
  for (Cell v = 0; v < t.cell_count(); ++v) {
    const auto nb = t.neighbors(v);
    const Cell a = nb[0];
    const Cell c = nb[1];
    // a -> v -> c and c -> v -> a
    const Move in_a = *b.km(a, v);
    const Move out_c = *b.km(v, c);
    const Move in_c = *b.km(c, v);
    const Move out_a = *b.km(v, a);
    ++d.counts[static_cast<std::size_t>(rel(in_a, out_c).index())];
    ++d.counts[static_cast<std::size_t>(rel(in_c, out_a).index())];
  }
  d.freq = detail::normalise(d.counts, t.side());
  return d;
}

/// Per-bucket mean and population standard deviation over a set of
/// distributions.
struct DistributionSummary {
  Buckets mean{};
  Buckets stddev{};
  std::size_t trials = 0;
};

inline DistributionSummary aggregate(std::span<const Buckets> dists) {
  if (dists.empty()) throw Error(ErrorKind::kEmptySet, "cannot aggregate zero distributions");
  DistributionSummary s;
  s.trials = dists.size();
  const double count = static_cast<double>(dists.size());
  for (const auto& d : dists) {
    for (std::size_t i = 0; i < d.size(); ++i) s.mean[i] += d[i];
  }
  for (auto& m : s.mean) m /= count;
  for (const auto& d : dists) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      const double dev = d[i] - s.mean[i];
      s.stddev[i] += dev * dev;
    }
  }
  for (auto& sd : s.stddev) sd = std::sqrt(sd / count);
  return s;
}

inline DistributionSummary aggregate(const std::vector<Buckets>& dists) {
  return aggregate(std::span<const Buckets>(dists));
}

/// Number of rails in a cover; for tours, the quantity the rail conjecture
/// is about.
inline std::size_t rail_count(const CycleCover& t) {
  validate(t);
  return find_rails(t).size();
}

}  // namespace tourney

#endif  // TOURNEY_STATS_HPP
