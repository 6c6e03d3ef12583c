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

#ifndef TOURNEY_GENERATORS_HPP
#define TOURNEY_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tourney/braid.hpp"
#include "tourney/config.hpp"
#include "tourney/cover.hpp"
#include "tourney/neural.hpp"
#include "tourney/rng.hpp"
#include "tourney/surgery.hpp"
#include "tourney/tiled.hpp"
#include "tourney/warnsdorff.hpp"

namespace tourney {

enum class Algorithm {
  kWarnsdorffTour,
  kWarnsdorffTourney,
  kNeuralTour,
  kNeuralTourney,
  kTiled,
  kDc,
  kBraid,
  kFourCover,
};

inline constexpr std::array<std::pair<Algorithm, std::string_view>, 8> kAlgorithmNames = {{
    {Algorithm::kWarnsdorffTour, "warnsdorff-tour"},
    {Algorithm::kWarnsdorffTourney, "warnsdorff-tourney"},
    {Algorithm::kNeuralTour, "neural-tour"},
    {Algorithm::kNeuralTourney, "neural-tourney"},
    {Algorithm::kTiled, "tiled"},
    {Algorithm::kDc, "dc"},
    {Algorithm::kBraid, "braid"},
    {Algorithm::kFourCover, "four-cover"},
}};

constexpr std::string_view name_of(Algorithm a) {
  for (const auto& [alg, name] : kAlgorithmNames) {
    if (alg == a) return name;
  }
  return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [alg, n] : kAlgorithmNames) {
    if (n == name) return alg;
  }
  return std::nullopt;
}

constexpr bool produces_tour(Algorithm a) {
  return a == Algorithm::kWarnsdorffTour || a == Algorithm::kNeuralTour || a == Algorithm::kDc;
}

/// Runs one generator with its default caps.
inline CycleCover generate(Algorithm algo, int n, std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  switch (algo) {
    case Algorithm::kWarnsdorffTour:
      cfg.mode = Mode::kTour;
      return warnsdorff_tour(cfg);
    case Algorithm::kWarnsdorffTourney:
      cfg.mode = Mode::kTourney;
      return warnsdorff_tourney(cfg);
    case Algorithm::kNeuralTour:
      return neural_tour(cfg);
    case Algorithm::kNeuralTourney:
      return neural_tourney(cfg);
    case Algorithm::kTiled:
      return tiled_tourney(n);
    case Algorithm::kDc: {
      Rng rng(seed);
      return dc_tour(n, rng);
    }
    case Algorithm::kBraid:
      return braided_tourney(n);
    case Algorithm::kFourCover:
      return four_cover(n);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown algorithm");
}

/// Joins g into a tour if it is not one already.
inline CycleCover ensure_tour(CycleCover g, Rng& rng) {
  if (validate(g) == 1) return g;
  JoinOutcome out = join_to_tour(g, rng);
  if (!out.reached_tour) {
    throw Error(ErrorKind::kObfuscationFailed,
                "join stalled at " + std::to_string(out.size) + " cycles on side " + std::to_string(g.side()));
  }
  return std::move(out.cover);
}

/// A generator optionally followed by join (for tourneys) and obfuscation.
/// Named "<algorithm>" or "obfuscated-<algorithm>".
struct Pipeline {
  Algorithm algorithm = Algorithm::kDc;
  bool obfuscated = false;

  std::string name() const {
    return (obfuscated ? "obfuscated-" : "") + std::string(name_of(algorithm));
  }
};

inline std::optional<Pipeline> parse_pipeline(std::string_view name) {
  constexpr std::string_view prefix = "obfuscated-";
  Pipeline p;
  if (name.starts_with(prefix)) {
    p.obfuscated = true;
    name.remove_prefix(prefix.size());
  }
  const auto algo = parse_algorithm(name);
  if (!algo) return std::nullopt;
  p.algorithm = *algo;
  return p;
}

/// Generator output, or for obfuscated pipelines a joined and obfuscated
/// tour. The surgery stream is seeded independently of the generator's.
inline CycleCover run_pipeline(const Pipeline& p, int n, std::uint64_t seed) {
  CycleCover g = generate(p.algorithm, n, seed);
  if (!p.obfuscated) return g;
  Rng rng = Rng(seed).split(0x0b5c);
  g = ensure_tour(std::move(g), rng);
  return obfuscate(g, rng);
}

}  // namespace tourney

#endif  // TOURNEY_GENERATORS_HPP
