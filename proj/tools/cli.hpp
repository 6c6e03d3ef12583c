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

// Command-line front end. Kept in a header so the tests can drive it
// without spawning processes.

#ifndef TOURNEY_TOOLS_CLI_HPP
#define TOURNEY_TOOLS_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tourney/tourney.hpp"

namespace tourney::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string algorithm_list() {
  std::string s;
  for (const auto& [alg, name] : kAlgorithmNames) {
    if (!s.empty()) s += '|';
    s += name;
  }
  return s;
}

inline Pipeline pipeline_or_throw(const std::string& name) {
  auto p = parse_pipeline(name);
  if (!p) throw UsageError("unknown algorithm '" + name + "' (expected [obfuscated-]{" + algorithm_list() + "})");
  return *p;
}

/// Writes g as text, SVG, or both. For "both" the extension of path is
/// replaced by .txt and .svg.
inline std::vector<std::string> write_cover(const CycleCover& g, const std::string& format,
                                            const std::filesystem::path& path, const SvgOptions& svg) {
  std::vector<std::string> written;
  const auto put = [&](const std::filesystem::path& p, bool as_svg) {
    save_file(p, as_svg ? write_svg(g, svg) : write_text(g));
    written.push_back(p.string());
  };
  if (format == "txt") {
    put(path, false);
  } else if (format == "svg") {
    put(path, true);
  } else {
    auto stem = path;
    put(stem.replace_extension(".txt"), false);
    put(stem.replace_extension(".svg"), true);
  }
  return written;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knight's tourney generator: build cycle covers of the knight's graph, join them into "
               "closed tours, obfuscate tours and measure move statistics."};
  app.name("tourney");
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  // generate
  std::string algo = "dc";
  int n = 8;
  std::uint64_t seed = 1;
  std::string format = "txt";
  std::string output;
  SvgOptions svg;
  bool no_grid = false;
  auto* gen = app.add_subcommand("generate", "Generate a tour or tourney");
  gen->add_option("--algo", algo, algorithm_list())->required();
  gen->add_option("-n", n, "Board side")->required();
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--format", format, "svg|txt|both")->check(CLI::IsMember({"svg", "txt", "both"}));
  gen->add_option("-o", output, "Output path")->required();
  gen->add_option("--pitch", svg.pitch, "SVG units per cell")->check(CLI::PositiveNumber);
  gen->add_flag("--no-grid", no_grid, "Omit the SVG board grid");
  gen->add_flag("--dots", svg.dots, "Mark cell centres in the SVG");

  // obfuscate
  std::string input;
  int iters = kDefaultShatterIters;
  int attempts = kDefaultObfuscateAttempts;
  auto* obf = app.add_subcommand("obfuscate", "Shatter and re-join a tour (tourneys are joined first)");
  obf->add_option("-i", input, "Input tourney in text form")->required();
  obf->add_option("--iters", iters, "Shatter passes")->check(CLI::NonNegativeNumber);
  obf->add_option("--attempts", attempts, "Retries before giving up")->check(CLI::PositiveNumber);
  obf->add_option("--seed", seed, "Random seed");
  obf->add_option("--format", format, "svg|txt|both")->check(CLI::IsMember({"svg", "txt", "both"}));
  obf->add_option("-o", output, "Output path")->required();

  // stats
  int trials = 10;
  auto* st = app.add_subcommand("stats", "Move distribution statistics as CSV");
  st->add_option("--algo", algo, "[obfuscated-]algorithm")->required();
  st->add_option("-n", n, "Board side")->required();
  st->add_option("--trials", trials, "Number of seeded runs")->check(CLI::PositiveNumber);
  st->add_option("--seed", seed, "Base seed");
  st->add_option("-o", output, "CSV path")->required();

  // bench
  int n_min = 20, n_max = 100, step = 10;
  auto* be = app.add_subcommand("bench", "Wall time per cell as CSV");
  be->add_option("--algo", algo, "[obfuscated-]algorithm")->required();
  be->add_option("--n-min", n_min, "Smallest side")->check(CLI::PositiveNumber);
  be->add_option("--n-max", n_max, "Largest side")->check(CLI::PositiveNumber);
  be->add_option("--step", step, "Side increment")->check(CLI::PositiveNumber);
  be->add_option("--trials", trials, "Timed runs per side")->check(CLI::PositiveNumber);
  be->add_option("--seed", seed, "Base seed");
  be->add_option("-o", output, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  svg.grid = !no_grid;

  try {
    err << "seed: " << seed << '\n';
    if (gen->parsed()) {
      const auto algorithm = parse_algorithm(algo);
      if (!algorithm) throw UsageError("unknown algorithm '" + algo + "' (expected " + algorithm_list() + ")");
      const CycleCover g = generate(*algorithm, n, seed);
      const int k = validate(g, produces_tour(*algorithm));
      for (const auto& p : write_cover(g, format, output, svg)) out << p << '\n';
      err << name_of(*algorithm) << " n=" << n << " cycles=" << k << '\n';
    } else if (obf->parsed()) {
      CycleCover g = read_text(load_file(input));
      Rng rng(seed);
      g = ensure_tour(std::move(g), rng);
      g = obfuscate(g, rng, iters, attempts);
      for (const auto& p : write_cover(g, format, output, svg)) out << p << '\n';
    } else if (st->parsed()) {
      const Pipeline p = pipeline_or_throw(algo);
      save_file(output, write_stats_csv({collect_stats(p, n, trials, seed)}));
      out << output << '\n';
    } else if (be->parsed()) {
      const Pipeline p = pipeline_or_throw(algo);
      if (n_min > n_max) throw UsageError("--n-min exceeds --n-max");
      std::vector<int> sides;
      for (int s = n_min; s <= n_max; s += step) sides.push_back(s);
      save_file(output, write_bench_csv(bench(p, sides, trials, seed)));
      out << output << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace tourney::cli

#endif  // TOURNEY_TOOLS_CLI_HPP
