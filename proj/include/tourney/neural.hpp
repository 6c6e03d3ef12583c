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

#ifndef TOURNEY_NEURAL_HPP
#define TOURNEY_NEURAL_HPP

#include <cstdint>
#include <vector>

#include "tourney/config.hpp"
#include "tourney/cover.hpp"
#include "tourney/error.hpp"
#include "tourney/rng.hpp"

namespace tourney {

/// Edge-neuron network in the style of Takefuji and Lee. One binary neuron
/// per edge of the knight's graph; a neuron is pushed up when its endpoints
/// have too few active edges and down when they have too many, and the
/// network is at rest exactly when the active edges form a 2-regular graph.
///
///   U(e) <- U(e) + 4 - deg(u) - deg(v)    for e = (u, v), degrees counting e
///   V(e) <- 1 if U(e) > 3, 0 if U(e) < 0, unchanged otherwise
class EdgeNetwork {
 public:
  explicit EdgeNetwork(int n) : board_(n) {
    for (Cell u = 0; u < board_.cell_count(); ++u) {
      for (int m = 4; m < kMoveCount; ++m) {
        if (auto v = board_.dest(u, Move(m))) {
          from_.push_back(u);
          to_.push_back(*v);
        }
      }
    }
    potential_.assign(from_.size(), 0);
    output_.assign(from_.size(), 0);
    active_degree_.assign(static_cast<std::size_t>(board_.cell_count()), 0);
  }

  std::size_t neuron_count() const { return from_.size(); }
  Edge edge(std::size_t e) const { return {from_[e], to_[e]}; }
  int potential(std::size_t e) const { return potential_[e]; }
  bool output(std::size_t e) const { return output_[e] != 0; }

  /// U = 0 everywhere, V drawn as fair coin flips.
  void randomize(Rng& rng) {
    std::fill(potential_.begin(), potential_.end(), 0);
    std::fill(active_degree_.begin(), active_degree_.end(), 0);
    std::fill(output_.begin(), output_.end(), 0);
    for (std::size_t e = 0; e < output_.size(); ++e) set_output(e, rng.coin());
  }

  /// Sets V to the indicator of g's edges with U = 0.
  void load(const CycleCover& g) {
    std::fill(potential_.begin(), potential_.end(), 0);
    std::fill(active_degree_.begin(), active_degree_.end(), 0);
    std::fill(output_.begin(), output_.end(), 0);
    for (std::size_t e = 0; e < output_.size(); ++e) set_output(e, g.has_edge(from_[e], to_[e]));
  }

  struct SweepResult {
    bool output_changed = false;
    bool potential_changed = false;
  };

  /// One pass over all neurons in edge order. Gauss-Seidel updates use the
  /// freshest outputs; synchronous updates read the outputs from before the
  /// sweep.
  SweepResult sweep(bool synchronous = false) {
    SweepResult res;
    if (synchronous) snapshot_ = active_degree_;
    const auto& deg = synchronous ? snapshot_ : active_degree_;
    std::vector<std::uint8_t> next;
    if (synchronous) next = output_;
    for (std::size_t e = 0; e < from_.size(); ++e) {
      const int self = output_[e];
      const int delta = 4 - deg[static_cast<std::size_t>(from_[e])] - deg[static_cast<std::size_t>(to_[e])];
      if (delta != 0) res.potential_changed = true;
      potential_[e] += delta;
      int v = self;
      if (potential_[e] > 3) v = 1;
      else if (potential_[e] < 0) v = 0;
      if (v == self) continue;
      res.output_changed = true;
      if (synchronous) next[e] = static_cast<std::uint8_t>(v);
      else set_output(e, v != 0);
    }
    if (synchronous) {
      for (std::size_t e = 0; e < from_.size(); ++e) set_output(e, next[e] != 0);
    }
    return res;
  }

  bool two_regular() const {
    for (auto d : active_degree_) {
      if (d != 2) return false;
    }
    return true;
  }

  CycleCover active_edges() const {
    CycleCover g(board_.side());
    for (std::size_t e = 0; e < from_.size(); ++e) {
      if (output_[e]) g.add_edge(from_[e], to_[e]);
    }
    return g;
  }

 private:
  void set_output(std::size_t e, bool on) {
    const std::uint8_t v = on ? 1 : 0;
    if (output_[e] == v) return;
    const int d = on ? 1 : -1;
    output_[e] = v;
    active_degree_[static_cast<std::size_t>(from_[e])] += d;
    active_degree_[static_cast<std::size_t>(to_[e])] += d;
  }

  Board board_;
  std::vector<Cell> from_;
  std::vector<Cell> to_;
  std::vector<int> potential_;
  std::vector<std::uint8_t> output_;
  std::vector<int> active_degree_;
  std::vector<int> snapshot_;
};

struct NeuralStats {
  int attempts = 0;
  long long sweeps = 0;
};

/// Runs the network from random states until it settles on a tourney (or,
/// in tour mode, on a single cycle). Each attempt gets cfg.epoch_cap sweeps.
inline CycleCover neural_generate(const GeneratorConfig& cfg, NeuralStats* stats = nullptr) {
  require_even_board(cfg.n, 6, "neural network");
  Rng rng(cfg.seed);
  EdgeNetwork net(cfg.n);
  bool every_attempt_hit_cap = true;
  NeuralStats local;
  for (int attempt = 0; attempt < cfg.attempt_cap; ++attempt) {
    ++local.attempts;
    net.randomize(rng);
    for (int epoch = 0; epoch < cfg.epoch_cap; ++epoch) {
      const auto res = net.sweep(cfg.synchronous);
      ++local.sweeps;
      if (res.output_changed) continue;
      if (!net.two_regular()) {
        if (res.potential_changed) continue;
        every_attempt_hit_cap = false;  // frozen short of a cover
        break;
      }
      every_attempt_hit_cap = false;
      CycleCover g = net.active_edges();
      if (cfg.mode == Mode::kTourney || label_cycles(g).count == 1) {
        if (stats) *stats = local;
        return g;
      }
      break;
    }
  }
  if (stats) *stats = local;
  if (every_attempt_hit_cap) {
    throw Error(ErrorKind::kEpochLimit,
                "network did not settle within " + std::to_string(cfg.epoch_cap) + " sweeps");
  }
  throw Error(ErrorKind::kAttemptsExhausted,
              "network: no " + std::string(cfg.mode == Mode::kTour ? "tour" : "tourney") + " in " +
                  std::to_string(cfg.attempt_cap) + " attempts");
}

inline CycleCover neural_tourney(GeneratorConfig cfg) {
  cfg.mode = Mode::kTourney;
  return neural_generate(cfg);
}

inline CycleCover neural_tour(GeneratorConfig cfg) {
  cfg.mode = Mode::kTour;
  return neural_generate(cfg);
}

}  // namespace tourney

#endif  // TOURNEY_NEURAL_HPP
