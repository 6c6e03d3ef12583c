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

#ifndef TOURNEY_CONFIG_HPP
#define TOURNEY_CONFIG_HPP

#include <cstdint>
#include <string>

#include "tourney/error.hpp"

namespace tourney {

enum class Mode { kTour, kTourney };

struct GeneratorConfig {
  int n = 8;
  Mode mode = Mode::kTour;
  std::uint64_t seed = 0;
  int attempt_cap = 1'000'000;
  int epoch_cap = 2'000;  // network sweeps per attempt
  bool synchronous = false;  // network only: Jacobi instead of Gauss-Seidel sweeps
};

inline void require_even_board(int n, int min, const char* what) {
  if (n < min || n % 2 != 0) {
    throw Error(ErrorKind::kBadSize, std::string(what) + " needs an even board side >= " +
                                         std::to_string(min) + ", got " + std::to_string(n));
  }
}

}  // namespace tourney

#endif  // TOURNEY_CONFIG_HPP
