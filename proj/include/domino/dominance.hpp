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

#ifndef DOMINO_DOMINANCE_HPP
#define DOMINO_DOMINANCE_HPP

#include <optional>
#include <vector>

#include "domino/game.hpp"

namespace domino {

/// Witness that `dominated` is strictly dominated by `mixture`: for every
/// opponent action the mixture's payoff exceeds the dominated action's by at
/// least `margin` > 0. The mixture support never contains `dominated`.
struct DominanceCertificate {
  int dominated = -1;
  MixedStrategy mixture;
  Rational margin;
};

struct EliminationRound {
  int player = 0;
  // Survivor sets (original indices) at the start of the round.
  std::vector<int> row_survivors, col_survivors;
  // Removed actions with certificates, all in original indices; certificates
  // are valid against the game restricted to the round's survivors.
  std::vector<int> removed;
  std::vector<DominanceCertificate> certificates;
};

struct EliminationTrace {
  std::vector<EliminationRound> rounds;
  std::vector<int> row_survivors, col_survivors;
};

/// Subgame keeping the given original action indices (in the given order).
Game restrict_game(const Game& g, const std::vector<int>& row_keep,
                   const std::vector<int>& col_keep);

/// True iff action j strictly dominates action i coordinatewise.
bool pure_dominates(const Game& g, int player, int i, int j);

/// True iff the mixture's payoff vector strictly exceeds v_i coordinatewise.
/// If i itself carries mixture weight p < 1, it is folded out first by
/// renormalizing the remaining weights by 1/(1-p).
bool mixed_dominates(const Game& g, int player, const MixedStrategy& mixture, int i);

/// Solves max eps s.t. sum_j p_j u(j,k) >= u(i,k) + eps over probability
/// vectors p on `allowed`; a certificate exists iff the optimum is > 0.
std::optional<DominanceCertificate> find_dominating_mixture(
    const Game& g, int player, int i, const std::vector<int>& allowed);

/// Shrinks a certificate's support to at most min(n-1, m) actions (player-1
/// view; transposed bound for player 2) via positive normalization and the
/// bounded conical Caratheodory reduction, then re-verifies in `g`.
DominanceCertificate reduce_support(const Game& g, int player,
                                    const DominanceCertificate& cert);

/// Iterated elimination of strictly dominated strategies. Alternates players
/// (row first), removing all dominated actions of the scanned player per
/// round, until a full pass removes nothing.
EliminationTrace iesds(const Game& g);

}  // namespace domino

#endif  // DOMINO_DOMINANCE_HPP
