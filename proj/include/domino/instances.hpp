// Copyright 2026 The Domino Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOMINO_INSTANCES_HPP
#define DOMINO_INSTANCES_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "domino/game.hpp"

namespace domino {

/// Family witnessing that the min(n-1, m) support bound is tight: the target
/// row is strictly dominated, and only by mixtures over exactly min(n-1, m)
/// other actions. Column payoffs are all zero. Requires n, m >= 2.
std::pair<Game, int> tight_instance(int n, int m);

/// Deterministic integer-payoff game from a 64-bit LCG
/// (s <- 6364136223846793005*s + 1442695040888963407, value = lo + (s >> 33)
/// mod (hi - lo + 1)); identical seeds give identical games everywhere.
Game random_game(int n, int m, std::uint64_t seed, long lo, long hi);

/// Named fixtures: "fig1", "five-lines", "vec3x2".
Game paper_example(const std::string& name);

}  // namespace domino

#endif  // DOMINO_INSTANCES_HPP
