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

#ifndef DOMINO_GAME_HPP
#define DOMINO_GAME_HPP

#include <string>
#include <utility>
#include <vector>

#include "domino/rational.hpp"

namespace domino {

/// Finite two-player game in normal form. row_payoffs / col_payoffs are both
/// n x m (rows = row-player actions, columns = column-player actions).
struct Game {
  std::string title;
  std::vector<std::string> row_actions;
  std::vector<std::string> col_actions;
  std::vector<Vec> row_payoffs;
  std::vector<Vec> col_payoffs;

  int rows() const { return static_cast<int>(row_actions.size()); }
  int cols() const { return static_cast<int>(col_actions.size()); }

  /// Number of actions of `player` (1 or 2).
  int actions(int player) const { return player == 1 ? rows() : cols(); }
  const std::string& action_name(int player, int i) const {
    return player == 1 ? row_actions[i] : col_actions[i];
  }
};

/// Probability distribution over the opponent's actions.
struct Belief {
  Vec probs;
};

/// Sparse probability distribution over one player's actions; weights are
/// strictly positive and sum to 1.
struct MixedStrategy {
  std::vector<std::pair<int, Rational>> weights;

  std::vector<int> support() const {
    std::vector<int> s;
    for (const auto& [i, w] : weights) s.push_back(i);
    return s;
  }
};

/// Parses the game JSON format; numerals may be integers, decimal strings,
/// or "p/q" strings, all converted to exact rationals.
Game parse_game(const std::string& text);

/// Canonical JSON with all payoffs as "p/q" strings; parse round-trips.
std::string serialize_game(const Game& g);

/// Shifts the chosen player's payoffs by c = 1 + max(0, -min entry) so they
/// all become strictly positive. Returns the shifted game and c.
std::pair<Game, Rational> normalize_positive(const Game& g, int player);

/// Row (player 1) or column (player 2) of that player's payoff matrix.
Vec payoff_vector(const Game& g, int player, int action);

Rational expected_payoff(const Game& g, int player, int action, const Belief& belief);

/// Swaps the players; player-2 analyses run player-1 code on the transpose.
Game transpose(const Game& g);

void validate_game(const Game& g);

void validate_mixed_strategy(const Game& g, int player, const MixedStrategy& s);

}  // namespace domino

#endif  // DOMINO_GAME_HPP
