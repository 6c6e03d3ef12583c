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

#ifndef TOURNEY_BENCH_HPP
#define TOURNEY_BENCH_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "tourney/generators.hpp"
#include "tourney/output.hpp"
#include "tourney/rng.hpp"

namespace tourney {

/// One timed generation.
struct RunRecord {
  std::string algorithm;
  int n = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  int cycles = 0;
  std::size_t rails = 0;
  std::vector<std::string> outputs;
};

/// Per-board-size timing summary, in microseconds per cell.
struct BenchRow {
  std::string algorithm;
  int n = 0;
  std::size_t trials = 0;
  double mean_us_per_cell = 0.0;
  double sd_us_per_cell = 0.0;
};

/// Seed of trial t under base seed s.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) { return Rng(seed).split(t).seed(); }

inline RunRecord timed_run(const Pipeline& p, int n, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  CycleCover g = run_pipeline(p, n, seed);
  const auto t1 = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.algorithm = p.name();
  rec.n = n;
  rec.seed = seed;
  rec.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  rec.cycles = validate(g);
  rec.rails = find_rails(g).size();
  return rec;
}

/// Times `trials` runs per board side after one untimed warm-up run.
/// Runs are serial so they do not compete for cores.
inline std::vector<BenchRow> bench(const Pipeline& p, const std::vector<int>& sides, int trials,
                                   std::uint64_t seed, std::vector<RunRecord>* records = nullptr) {
  if (trials < 1) throw Error(ErrorKind::kInvalidArgument, "bench needs at least one trial");
  std::vector<BenchRow> rows;
  for (int n : sides) {
    (void)run_pipeline(p, n, trial_seed(seed, static_cast<std::uint64_t>(trials)));
    std::vector<double> per_cell;
    for (int t = 0; t < trials; ++t) {
      RunRecord rec = timed_run(p, n, trial_seed(seed, static_cast<std::uint64_t>(t)));
      per_cell.push_back(rec.wall_seconds * 1e6 / (static_cast<double>(n) * n));
      if (records) records->push_back(std::move(rec));
    }
    double mean = 0;
    for (double v : per_cell) mean += v;
    mean /= static_cast<double>(per_cell.size());
    double var = 0;
    for (double v : per_cell) var += (v - mean) * (v - mean);
    rows.push_back({p.name(), n, per_cell.size(), mean, std::sqrt(var / static_cast<double>(per_cell.size()))});
  }
  return rows;
}

inline std::string write_bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "algorithm,n,trials,mean_us_per_cell,sd_us_per_cell\n";
  for (const auto& r : rows) {
    out += r.algorithm + "," + std::to_string(r.n) + "," + std::to_string(r.trials) + "," +
           detail::fixed6(r.mean_us_per_cell) + "," + detail::fixed6(r.sd_us_per_cell) + "\n";
  }
  return out;
}

/// Mean and spread of the move and relative-move distributions over
/// `trials` seeded runs of a pipeline.
inline StatsRow collect_stats(const Pipeline& p, int n, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::kEmptySet, "stats needs at least one trial");
  std::vector<Buckets> f, r;
  for (int t = 0; t < trials; ++t) {
    const CycleCover g = run_pipeline(p, n, trial_seed(seed, static_cast<std::uint64_t>(t)));
    f.push_back(move_distribution(g).freq);
    r.push_back(relative_move_distribution(g).freq);
  }
  return {p.name(), n, aggregate(f), aggregate(r)};
}

}  // namespace tourney

#endif  // TOURNEY_BENCH_HPP
