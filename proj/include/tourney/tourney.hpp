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

// Umbrella header.

#ifndef TOURNEY_TOURNEY_HPP
#define TOURNEY_TOURNEY_HPP

#include "tourney/bench.hpp"
#include "tourney/board.hpp"
#include "tourney/braid.hpp"
#include "tourney/config.hpp"
#include "tourney/cover.hpp"
#include "tourney/error.hpp"
#include "tourney/generators.hpp"
#include "tourney/neural.hpp"
#include "tourney/output.hpp"
#include "tourney/rails.hpp"
#include "tourney/rng.hpp"
#include "tourney/stats.hpp"
#include "tourney/surgery.hpp"
#include "tourney/text_format.hpp"
#include "tourney/tiled.hpp"
#include "tourney/warnsdorff.hpp"

#endif  // TOURNEY_TOURNEY_HPP
