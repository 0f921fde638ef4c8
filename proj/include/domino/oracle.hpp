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

#ifndef DOMINO_ORACLE_HPP
#define DOMINO_ORACLE_HPP

#include <optional>

#include "domino/dominance.hpp"
#include "domino/game.hpp"

namespace domino {

/// Beliefs with probabilities of denominator `resolution` are enumerated
/// exhaustively. Grid consistency is necessary, not sufficient.
struct GridSpec {
  int resolution = 1;
};

/// Exact minimal support size of any strictly dominating mixture for action
/// i, by exhaustive subset search in increasing size order; nullopt when no
/// subset dominates. Subset search refuses player action counts above
/// `max_actions` (exponential growth).
std::optional<int> enumerate_min_support(const Game& g, int player, int i,
                                         int max_actions = 12);

/// Searches every grid belief for one where action i is a weak best
/// response; such a belief contradicts a "never best response" verdict.
/// nullopt means the grid is consistent with NBR.
std::optional<Belief> grid_check_nbr(const Game& g, int player, int i,
                                     const GridSpec& grid);

/// Checks the strict expected-payoff inequality of a certificate at every
/// simplex vertex (complete by the coordinatewise criterion) and at every
/// grid belief (redundant cross-check).
bool verify_dominance_exhaustive(const Game& g, int player,
                                 const DominanceCertificate& cert,
                                 const GridSpec& grid);

}  // namespace domino

#endif  // DOMINO_ORACLE_HPP
