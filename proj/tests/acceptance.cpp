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

// Acceptance checks. Each criterion prints one PASS/FAIL line followed by
// indented detail lines; run with criterion ids (AC1 ... AC11) or none for
// all. Exit status is nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "tourney/tourney.hpp"

namespace {

using namespace tourney;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Report {
  bool pass = true;
  std::vector<std::string> lines;

  void note(const std::string& s) { lines.push_back(s); }
  void fail(const std::string& s) {
    pass = false;
    lines.push_back("FAIL " + s);
  }
  void check(bool ok, const std::string& s) {
    if (ok) note(s);
    else fail(s);
  }
};

std::string fmt(const char* f, double a) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string buckets(const Buckets& b) {
  std::string s = "[";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " " : "") + fmt("%.4f", b[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------

// Neural tour mode is exponential in n: give each size a share of a fixed
// budget, drawing fresh seeds in small attempt batches until it runs out.
std::optional<CycleCover> neural_tour_within(int n, double budget_s) {
  const auto t0 = Clock::now();
  for (std::uint64_t s = 0; seconds_since(t0) < budget_s; ++s) {
    GeneratorConfig cfg;
    cfg.n = n;
    cfg.seed = s;
    cfg.mode = Mode::kTour;
    cfg.attempt_cap = 20;
    try {
      return neural_generate(cfg);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kAttemptsExhausted && e.kind() != ErrorKind::kEpochLimit) throw;
    }
  }
  return std::nullopt;
}

Report ac1() {
  Report rep;
  const auto t0 = Clock::now();
  // Neural tours run last and share whatever is left of the time limit.
  constexpr double kLimit = 120.0;
  constexpr double kReserve = 5.0;
  std::vector<std::pair<Algorithm, std::string_view>> order(kAlgorithmNames.begin(), kAlgorithmNames.end());
  std::stable_partition(order.begin(), order.end(), [](const auto& a) { return a.first != Algorithm::kNeuralTour; });
  for (const auto& [algo, name] : order) {
    const auto ta = Clock::now();
    std::vector<int> sizes;
    for (int n = 8; n <= 40; n += 2) {
      if (algo != Algorithm::kFourCover || n % 4 == 0) sizes.push_back(n);
    }
    std::vector<int> failed;
    int done = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const int n = sizes[i];
      try {
        CycleCover g;
        if (algo == Algorithm::kNeuralTour) {
          const double left = kLimit - kReserve - seconds_since(t0);
          auto t = neural_tour_within(n, std::max(0.0, left / static_cast<double>(sizes.size() - i)));
          if (!t) {
            failed.push_back(n);
            continue;
          }
          g = std::move(*t);
        } else {
          g = generate(algo, n, static_cast<std::uint64_t>(n));
        }
        const int k = validate(g, produces_tour(algo));
        if (produces_tour(algo) && k != 1) failed.push_back(n);
        else ++done;
      } catch (const Error& e) {
        failed.push_back(n);
        rep.note(std::string(name) + " n=" + std::to_string(n) + ": " + e.what());
      }
    }
    std::string msg = std::string(name) + ": " + std::to_string(done) + " sizes valid in " + fmt("%.1f s", seconds_since(ta));
    if (!failed.empty()) {
      msg += "; no valid output within the time limit for n =";
      for (int n : failed) msg += " " + std::to_string(n);
    }
    rep.check(failed.empty(), msg);
  }
  const double total = seconds_since(t0);
  rep.check(total < kLimit, fmt("total runtime %.1f s (limit 120 s)", total));
  return rep;
}

Report ac2() {
  Report rep;
  std::string sizes;
  for (int n = 8; n <= 40; n += 2) {
    const int k = validate(braided_tourney(n));
    if (k != 4 * (n / 4)) rep.fail("n=" + std::to_string(n) + ": k=" + std::to_string(k));
    sizes += " " + std::to_string(n) + ":" + std::to_string(k);
  }
  rep.note("n:k" + sizes);
  return rep;
}

// Random 2-regular covers of small boards: Warnsdorff tourneys, some of them
// shattered a few times to reach shapes the walk does not produce.
std::vector<CycleCover> random_covers(int count) {
  std::vector<CycleCover> out;
  Rng rng(0xac3);
  for (int i = 0; i < count; ++i) {
    GeneratorConfig cfg;
    cfg.n = 6 + 2 * (i % 3);
    cfg.seed = rng.next();
    CycleCover g = warnsdorff_tourney(cfg);
    const int shatters = i % 4;
    for (int s = 0; s < shatters; ++s) g = shatter(g, rng).cover;
    out.push_back(std::move(g));
  }
  return out;
}

Report ac3() {
  Report rep;
  int mismatches = 0;
  std::size_t total = 0;
  const auto covers = random_covers(200);
  for (const auto& g : covers) {
    std::set<oracle::RailKey> got;
    for (const auto& r : find_rails(g)) got.emplace(r.top(), r.primary().index(), r.cross().index());
    const auto want = oracle::rails(g);
    total += want.size();
    if (got != want) ++mismatches;
  }
  rep.check(mismatches == 0, std::to_string(covers.size()) + " covers (n = 6, 8, 10), " + std::to_string(total) +
                                 " rails, " + std::to_string(mismatches) + " set mismatches");
  return rep;
}

Report ac4() {
  Report rep;
  auto covers = random_covers(200);
  Rng rng(0xac4);
  for (int i = 0; i < 100; ++i) covers.push_back(oracle::random_dense(6 + i % 7, rng, 0.3 + 0.05 * (i % 10)));
  std::size_t worst = 0, edges = 0;
  for (const auto& g : covers) {
    const auto rails = find_rails(g);
    std::map<Edge, std::size_t> count;
    for (const auto& r : rails) {
      const auto [v0, v1, v2, v3] = rail_cells(r, g.board());
      ++count[{std::min(v0, v1), std::max(v0, v1)}];
      ++count[{std::min(v2, v3), std::max(v2, v3)}];
    }
    edges += g.edge_count();
    for (const auto& [e, c] : count) worst = std::max(worst, c);
  }
  rep.check(worst <= 6, std::to_string(covers.size()) + " subgraphs (200 covers, 100 dense), " + std::to_string(edges) +
                            " edges, max rails on one edge = " + std::to_string(worst));
  return rep;
}

Report ac5() {
  Report rep;
  long long join_runs = 0, law_violations = 0;
  const auto sources = std::vector<std::pair<std::string, std::function<CycleCover(int)>>>{
      {"tiled", tiled_tourney}, {"braid", braided_tourney}, {"four-cover", four_cover}};
  for (const auto& [name, make] : sources) {
    for (int n : {12, 16, 20, 24}) {
      const CycleCover start = make(n);
      int reached = 0;
      std::vector<std::uint64_t> failures;
      for (std::uint64_t seed = 0; seed < 32; ++seed) {
        Rng rng(seed);
        CycleCover g = start;
        int k = validate(g);
        // join_to_tour's loop, unrolled so every round's size law is checked
        for (int round = 0; round < kDefaultJoinRounds && k > 1; ++round) {
          const JoinResult r = join(g, rng);
          ++join_runs;
          const int out = validate(r.cover);
          if (out != r.input_size - static_cast<int>(r.switched.size()) || r.input_size != k || r.output_size != out) {
            ++law_violations;
          }
          if (r.switched.empty()) break;
          g = r.cover;
          k = out;
        }
        Rng again(seed);
        const JoinOutcome o = join_to_tour(start, again);
        if (o.reached_tour != (k == 1) || o.size != k) ++law_violations;
        if (k == 1) ++reached;
        else failures.push_back(seed);
      }
      std::string msg = name + " n=" + std::to_string(n) + ": " + std::to_string(reached) + "/32 reached a tour";
      if (!failures.empty()) {
        msg += " (failed seeds:";
        for (auto s : failures) msg += " " + std::to_string(s);
        msg += ")";
      }
      rep.check(reached * 100 >= 95 * 32, msg);
    }
  }
  rep.check(law_violations == 0, std::to_string(join_runs) + " join runs, " + std::to_string(law_violations) +
                                     " size-law violations");
  return rep;
}

struct Sample {
  DistributionSummary f;
  DistributionSummary r;
  double seconds = 0;
};

Sample sample(const Pipeline& p, int n, int trials, std::uint64_t seed) {
  const auto t0 = Clock::now();
  std::vector<Buckets> f, r;
  for (int t = 0; t < trials; ++t) {
    const CycleCover g = run_pipeline(p, n, trial_seed(seed, static_cast<std::uint64_t>(t)));
    if (p.obfuscated || produces_tour(p.algorithm)) validate(g, true);
    f.push_back(move_distribution(g).freq);
    r.push_back(relative_move_distribution(g).freq);
  }
  return {aggregate(f), aggregate(r), seconds_since(t0)};
}

Report ac6() {
  Report rep;
  const Sample s = sample({Algorithm::kWarnsdorffTour, false}, 50, 100, 0xac6);
  const auto& r = s.r.mean;
  rep.note("100 raw 50x50 tours in " + fmt("%.1f s", s.seconds) + ", r = " + buckets(r));
  const auto band = [&](std::size_t i, double centre, double tol) {
    rep.check(std::abs(r[i] - centre) <= tol,
              "r" + std::to_string(i) + " = " + fmt("%.4f", r[i]) + fmt(" (want %.3f +- %.3f)", centre, tol));
  };
  band(0, 0.272, 0.02);
  band(1, 0.145, 0.015);
  band(7, 0.145, 0.015);
  band(3, 0.129, 0.015);
  band(5, 0.129, 0.015);
  band(2, 0.090, 0.015);
  band(6, 0.090, 0.015);
  return rep;
}

const std::vector<Pipeline>& obfuscation_sources() {
  static const std::vector<Pipeline> p = {{Algorithm::kWarnsdorffTourney, true},
                                          {Algorithm::kDc, true},
                                          {Algorithm::kBraid, true},
                                          {Algorithm::kFourCover, true}};
  return p;
}

const std::vector<Sample>& obfuscated_samples() {
  static const std::vector<Sample> s = [] {
    std::vector<Sample> out;
    for (const auto& p : obfuscation_sources()) out.push_back(sample(p, 32, 100, 0xac7));
    return out;
  }();
  return s;
}

Report ac7() {
  Report rep;
  const auto& samples = obfuscated_samples();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& s = samples[k];
    const std::string name = obfuscation_sources()[k].name();
    rep.note(name + ": 100 tours in " + fmt("%.1f s", s.seconds));
    rep.note("  f    = " + buckets(s.f.mean));
    rep.note("  r    = " + buckets(s.r.mean));
    rep.note("  sd f = " + buckets(s.f.stddev));
    rep.note("  sd r = " + buckets(s.r.stddev));
    for (std::size_t i = 0; i < 8; ++i) {
      const double v = s.f.mean[i];
      if (std::abs(v - 0.125) > 0.005) rep.fail(name + " f" + std::to_string(i) + fmt(" = %.4f outside 0.125 +- 0.005", v));
    }
    for (std::size_t i : {0, 1, 7}) {
      const double v = s.r.mean[i];
      if (v < 0.138 || v > 0.168) rep.fail(name + " r" + std::to_string(i) + fmt(" = %.4f outside [0.138, 0.168]", v));
    }
    for (std::size_t i : {2, 3, 5, 6}) {
      const double v = s.r.mean[i];
      if (v < 0.123 || v > 0.148) rep.fail(name + " r" + std::to_string(i) + fmt(" = %.4f outside [0.123, 0.148]", v));
    }
    double worst_se = 0;
    for (const auto* sd : {&s.f.stddev, &s.r.stddev}) {
      for (double v : *sd) worst_se = std::max(worst_se, v / std::sqrt(static_cast<double>(s.f.trials)));
    }
    rep.check(worst_se < 0.004, name + fmt(": largest per-bucket standard error %.5f (limit 0.004)", worst_se));
  }
  return rep;
}

Report ac8() {
  Report rep;
  const auto& samples = obfuscated_samples();
  double worst = 0;
  for (std::size_t a = 0; a < samples.size(); ++a) {
    for (std::size_t b = a + 1; b < samples.size(); ++b) {
      for (std::size_t i = 0; i < 8; ++i) {
        worst = std::max(worst, std::abs(samples[a].f.mean[i] - samples[b].f.mean[i]));
        worst = std::max(worst, std::abs(samples[a].r.mean[i] - samples[b].r.mean[i]));
      }
    }
  }
  rep.check(worst < 0.01, fmt("largest pairwise bucket difference between obfuscated sources: %.4f (limit 0.01)", worst));
  const Sample raw = sample({Algorithm::kWarnsdorffTour, false}, 32, 100, 0xac8);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double d = raw.r.mean[0] - samples[k].r.mean[0];
    rep.check(d > 0.05, "raw warnsdorff-tour r0 " + fmt("%.4f", raw.r.mean[0]) + " vs " +
                            obfuscation_sources()[k].name() + fmt(" %.4f: difference %.4f (want > 0.05)", samples[k].r.mean[0], d));
  }
  return rep;
}

Report ac9() {
  Report rep;
  const Pipeline dc{Algorithm::kDc, true};
  const auto small = bench(dc, {20}, 20, 0xac9);
  const auto large = bench(dc, {100}, 5, 0xac9);
  const double ratio = large[0].mean_us_per_cell / small[0].mean_us_per_cell;
  rep.check(ratio <= 3.0, fmt("obfuscated-dc: %.3f us/cell at n=20, ", small[0].mean_us_per_cell) +
                              fmt("%.3f us/cell at n=100, ", large[0].mean_us_per_cell) + fmt("ratio %.2f (limit 3)", ratio));
  const auto tour = bench({Algorithm::kWarnsdorffTour, false}, {50}, 10, 0xac9);
  const auto tourney = bench({Algorithm::kWarnsdorffTourney, false}, {50}, 10, 0xac9);
  const double speedup = tour[0].mean_us_per_cell / tourney[0].mean_us_per_cell;
  rep.check(speedup >= 20.0, fmt("n=50: warnsdorff-tour %.1f ms, ", tour[0].mean_us_per_cell * 2.5) +
                                 fmt("warnsdorff-tourney %.2f ms, ", tourney[0].mean_us_per_cell * 2.5) +
                                 fmt("speedup %.0fx (want >= 20x)", speedup));
  return rep;
}

Report ac10() {
  Report rep;
  int covers = 0, bad = 0;
  const auto check = [&](const CycleCover& g, const std::string& what) {
    ++covers;
    const auto f = move_distribution(g).freq;
    const auto r = relative_move_distribution(g).freq;
    bool ok = std::abs(std::accumulate(f.begin(), f.end(), 0.0) - 1.0) < 1e-12 &&
              std::abs(std::accumulate(r.begin(), r.end(), 0.0) - 1.0) < 1e-12 && r[4] == 0.0;
    for (std::size_t i = 0; i < 8; ++i) ok = ok && f[i] == f[(i + 4) % 8] && r[i] == r[(8 - i) % 8];
    if (!ok) {
      ++bad;
      rep.fail(what);
    }
  };
  for (const auto& [algo, name] : kAlgorithmNames) {
    for (int n = 8; n <= 24; n += 2) {
      if (algo == Algorithm::kFourCover && n % 4) continue;
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const std::string what = std::string(name) + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
        const CycleCover g = generate(algo, n, seed);
        check(g, what);
        check(run_pipeline({algo, true}, n, seed), "obfuscated " + what);
        Rng rng(seed);
        check(shatter(g, rng).cover, "shattered " + what);
      }
    }
  }
  rep.note(std::to_string(covers) + " covers checked, " + std::to_string(bad) + " violations");
  return rep;
}

Report ac11() {
  Report rep;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "tourney_ac11";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto cli_run = [&](std::vector<std::string> args) {
    args.insert(args.begin(), "tourney");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (code != 0) rep.fail(args[1] + " exited " + std::to_string(code) + ": " + err.str());
    return code;
  };
  const auto same = [&](const std::string& a, const std::string& b) {
    return load_file(dir / a) == load_file(dir / b);
  };
  for (const auto& [algo, name] : kAlgorithmNames) {
    const std::string n = algo == Algorithm::kNeuralTour ? "10" : "16";
    for (const char* run : {"a", "b"}) {
      cli_run({"generate", "--algo", std::string(name), "-n", n, "--seed", "11", "--format", "both", "-o",
               (dir / (std::string(name) + "_" + run + ".x")).string()});
    }
    const std::string base = std::string(name);
    rep.check(same(base + "_a.txt", base + "_b.txt") && same(base + "_a.svg", base + "_b.svg"),
              base + ": text and SVG identical across runs");
  }
  for (const char* run : {"a", "b"}) {
    cli_run({"obfuscate", "-i", (dir / "braid_a.txt").string(), "--seed", "5", "-o", (dir / (std::string("obf_") + run + ".txt")).string()});
    cli_run({"stats", "--algo", "obfuscated-four-cover", "-n", "16", "--trials", "5", "--seed", "5", "-o",
             (dir / (std::string("stats_") + run + ".csv")).string()});
  }
  rep.check(same("obf_a.txt", "obf_b.txt"), "obfuscate: text identical across runs");
  rep.check(same("stats_a.csv", "stats_b.csv"), "stats: CSV identical across runs");
  fs::remove_all(dir);
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Report()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11},
  };
  std::set<std::string> selected(argv + 1, argv + argc);
  bool all_pass = true;
  for (const auto& [id, fn] : criteria) {
    if (!selected.empty() && !selected.count(id)) continue;
    Report rep;
    const auto t0 = Clock::now();
    try {
      rep = fn();
    } catch (const std::exception& e) {
      rep.fail(std::string("exception: ") + e.what());
    }
    std::cout << id << ' ' << (rep.pass ? "PASS" : "FAIL") << fmt(" (%.1f s)", seconds_since(t0)) << '\n';
    for (const auto& l : rep.lines) std::cout << "    " << l << '\n';
    std::cout.flush();
    all_pass = all_pass && rep.pass;
  }
  return all_pass ? 0 : 1;
}
