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

#include "domino/instances.hpp"

#include <stdexcept>

namespace domino {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

Game from_rows(std::string title, std::vector<std::string> row_names,
               std::vector<std::string> col_names, std::vector<Vec> rows) {
  Game g;
  g.title = std::move(title);
  g.row_actions = std::move(row_names);
  g.col_actions = std::move(col_names);
  g.row_payoffs = std::move(rows);
  g.col_payoffs.assign(g.rows(), Vec(g.cols(), Rational(0)));
  validate_game(g);
  return g;
}

}  // namespace

std::pair<Game, int> tight_instance(int n, int m) {
  if (n < 2 || m < 2) {
    throw std::invalid_argument("tight_instance: need n, m >= 2");
  }
  std::vector<Vec> rows;
  int target;
  if (n - 1 < m) {
    // Rows 1..n-1 carry n at their own coordinate and 1 on coordinates >= n;
    // the target row carries 1 on the first n-1 coordinates.
    for (int k = 0; k < n - 1; ++k) {
      Vec v(m, Rational(0));
      v[k] = n;
      for (int j = n - 1; j < m; ++j) v[j] = 1;
      rows.push_back(std::move(v));
    }
    Vec vn(m, Rational(0));
    for (int j = 0; j < n - 1; ++j) vn[j] = 1;
    rows.push_back(std::move(vn));
    target = n - 1;
  } else {
    // Rows 1..m are 2m e_k, the target row is all-ones, the rest are zero.
    for (int k = 0; k < m; ++k) {
      Vec v(m, Rational(0));
      v[k] = 2 * m;
      rows.push_back(std::move(v));
    }
    rows.push_back(Vec(m, Rational(1)));
    for (int k = m + 1; k < n; ++k) rows.push_back(Vec(m, Rational(0)));
    target = m;
  }
  Game g = from_rows("tight-" + std::to_string(n) + "x" + std::to_string(m),
                     numbered("a", n), numbered("b", m), std::move(rows));
  return {std::move(g), target};
}

Game random_game(int n, int m, std::uint64_t seed, long lo, long hi) {
  if (n < 1 || m < 1) throw std::invalid_argument("random_game: need n, m >= 1");
  if (lo > hi) throw std::invalid_argument("random_game: lo > hi");

  std::uint64_t state = seed;
  auto next = [&state, lo, hi]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo);
    return Rational(static_cast<long>(lo + static_cast<long>((state >> 33) % (span + 1))));
  };

  Game g;
  g.title = "random-" + std::to_string(n) + "x" + std::to_string(m) + "-seed" +
            std::to_string(seed);
  g.row_actions = numbered("a", n);
  g.col_actions = numbered("b", m);
  for (int r = 0; r < n; ++r) {
    Vec row(m);
    for (int c = 0; c < m; ++c) row[c] = next();
    g.row_payoffs.push_back(std::move(row));
  }
  for (int r = 0; r < n; ++r) {
    Vec row(m);
    for (int c = 0; c < m; ++c) row[c] = next();
    g.col_payoffs.push_back(std::move(row));
  }
  validate_game(g);
  return g;
}

Game paper_example(const std::string& name) {
  if (name == "fig1") {
    Game g;
    g.title = "fig1";
    g.row_actions = {"U", "M", "D"};
    g.col_actions = {"L", "R"};
    g.row_payoffs = {{Rational(6), Rational(0)},
                     {Rational(2), Rational(5)},
                     {Rational(3), Rational(3)}};
    g.col_payoffs = {{Rational(1), Rational(3)},
                     {Rational(1), Rational(0)},
                     {Rational(2), Rational(1)}};
    validate_game(g);
    return g;
  }
  if (name == "five-lines") {
    // Column 1 = line value at q=1, column 2 = value at q=0.
    return from_rows("five-lines", numbered("a", 5), numbered("b", 2),
                     {{Rational(8, 5), Rational(2, 5)},
                      {Rational(0), Rational(13, 10)},
                      {Rational(13, 10), Rational(4, 5)},
                      {Rational(1, 5), Rational(1)},
                      {Rational(4, 5), Rational(4, 5)}});
  }
  if (name == "vec3x2") {
    return from_rows("vec3x2", numbered("a", 3), numbered("b", 2),
                     {{Rational(1), Rational(5)},
                      {Rational(5), Rational(1)},
                      {Rational(2), Rational(2)}});
  }
  throw std::invalid_argument("paper_example: unknown fixture name: " + name);
}

}  // namespace domino
