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

#include "domino/game.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

namespace domino {

namespace {

using json = nlohmann::ordered_json;

Rational numeral_from_json(const json& j) {
  if (j.is_number_integer()) {
    return Rational(static_cast<long>(j.get<long long>()));
  }
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  throw std::invalid_argument("payoff numeral must be an integer or a string");
}

std::vector<Vec> matrix_from_json(const json& j, int n, int m, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(n) + " rows");
  }
  std::vector<Vec> rows;
  for (const auto& jr : j) {
    if (!jr.is_array() || static_cast<int>(jr.size()) != m) {
      throw std::invalid_argument(std::string(what) + ": ragged or misshaped row");
    }
    Vec row;
    for (const auto& cell : jr) row.push_back(numeral_from_json(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) {
    throw std::invalid_argument(std::string(what) + ": duplicate action names");
  }
}

}  // namespace

void validate_game(const Game& g) {
  if (g.rows() < 1 || g.cols() < 1) {
    throw std::invalid_argument("game must have at least one action per player");
  }
  check_unique(g.row_actions, "row_actions");
  check_unique(g.col_actions, "col_actions");
  for (const auto* mat : {&g.row_payoffs, &g.col_payoffs}) {
    if (static_cast<int>(mat->size()) != g.rows()) {
      throw std::invalid_argument("payoff matrix row count mismatch");
    }
    for (const auto& row : *mat) {
      if (static_cast<int>(row.size()) != g.cols()) {
        throw std::invalid_argument("payoff matrix column count mismatch");
      }
    }
  }
}

Game parse_game(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad game JSON: ") + e.what());
  }
  Game g;
  if (j.contains("title")) g.title = j.at("title").get<std::string>();
  g.row_actions = j.at("row_actions").get<std::vector<std::string>>();
  g.col_actions = j.at("col_actions").get<std::vector<std::string>>();
  const int n = static_cast<int>(g.row_actions.size());
  const int m = static_cast<int>(g.col_actions.size());
  g.row_payoffs = matrix_from_json(j.at("row_payoffs"), n, m, "row_payoffs");
  g.col_payoffs = matrix_from_json(j.at("col_payoffs"), n, m, "col_payoffs");
  validate_game(g);
  return g;
}

std::string serialize_game(const Game& g) {
  validate_game(g);
  json j;
  if (!g.title.empty()) j["title"] = g.title;
  j["row_actions"] = g.row_actions;
  j["col_actions"] = g.col_actions;
  auto matrix = [](const std::vector<Vec>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
      json jr = json::array();
      for (const auto& x : row) jr.push_back(to_fraction_string(x));
      out.push_back(std::move(jr));
    }
    return out;
  };
  j["row_payoffs"] = matrix(g.row_payoffs);
  j["col_payoffs"] = matrix(g.col_payoffs);
  return j.dump(2) + "\n";
}

std::pair<Game, Rational> normalize_positive(const Game& g, int player) {
  validate_game(g);
  const auto& mat = (player == 1) ? g.row_payoffs : g.col_payoffs;
  Rational min_entry = mat[0][0];
  for (const auto& row : mat) {
    for (const auto& x : row) {
      if (x < min_entry) min_entry = x;
    }
  }
  Rational c = 1;
  if (min_entry < 0) c = 1 - min_entry;

  Game out = g;
  auto& target = (player == 1) ? out.row_payoffs : out.col_payoffs;
  for (auto& row : target) {
    for (auto& x : row) x += c;
  }
  return {std::move(out), c};
}

Vec payoff_vector(const Game& g, int player, int action) {
  if (action < 0 || action >= g.actions(player)) {
    throw std::out_of_range("payoff_vector: action index out of range");
  }
  if (player == 1) return g.row_payoffs[action];
  Vec col(g.rows());
  for (int r = 0; r < g.rows(); ++r) col[r] = g.col_payoffs[r][action];
  return col;
}

Rational expected_payoff(const Game& g, int player, int action, const Belief& belief) {
  Vec v = payoff_vector(g, player, action);
  if (belief.probs.size() != v.size()) {
    throw std::invalid_argument("expected_payoff: belief dimension mismatch");
  }
  return dot(v, belief.probs);
}

Game transpose(const Game& g) {
  Game out;
  out.title = g.title;
  out.row_actions = g.col_actions;
  out.col_actions = g.row_actions;
  out.row_payoffs.assign(g.cols(), Vec(g.rows()));
  out.col_payoffs.assign(g.cols(), Vec(g.rows()));
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      out.row_payoffs[c][r] = g.col_payoffs[r][c];
      out.col_payoffs[c][r] = g.row_payoffs[r][c];
    }
  }
  return out;
}

void validate_mixed_strategy(const Game& g, int player, const MixedStrategy& s) {
  std::set<int> seen;
  Rational sum = 0;
  for (const auto& [i, w] : s.weights) {
    if (i < 0 || i >= g.actions(player)) {
      throw std::invalid_argument("mixed strategy: action index out of range");
    }
    if (!seen.insert(i).second) {
      throw std::invalid_argument("mixed strategy: duplicate action index");
    }
    if (w <= 0) throw std::invalid_argument("mixed strategy: weights must be positive");
    sum += w;
  }
  if (sum != 1) throw std::invalid_argument("mixed strategy: weights must sum to 1");
}

}  // namespace domino
