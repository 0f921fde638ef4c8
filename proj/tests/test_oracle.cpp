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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "domino/instances.hpp"
#include "domino/oracle.hpp"
#include "domino/rationalizability.hpp"

using namespace domino;

TEST_CASE("minimal support enumeration on fixtures") {
  Game fig = paper_example("fig1");
  CHECK(enumerate_min_support(fig, 1, 2) == 2);
  CHECK_FALSE(enumerate_min_support(fig, 1, 0).has_value());

  auto [tight, target] = tight_instance(4, 2);
  CHECK(enumerate_min_support(tight, 1, target) == 2);

  Game g;
  g.row_actions = {"a", "b"};
  g.col_actions = {"x", "y"};
  g.row_payoffs = {{Rational(2), Rational(2)}, {Rational(1), Rational(1)}};
  g.col_payoffs = {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
  CHECK(enumerate_min_support(g, 1, 1) == 1);
}

TEST_CASE("minimal support enumeration refuses oversized games") {
  Game big = random_game(13, 2, 99, 0, 3);
  CHECK_THROWS_AS(enumerate_min_support(big, 1, 0, 12), std::invalid_argument);
}

TEST_CASE("grid check agrees with the exact never-best-response verdict") {
  Game fig = paper_example("fig1");
  CHECK_FALSE(grid_check_nbr(fig, 1, 2, GridSpec{100}).has_value());

  Game five = paper_example("five-lines");
  auto counter = grid_check_nbr(five, 1, 0, GridSpec{10});
  REQUIRE(counter.has_value());
  // The returned belief really makes a1 a weak best response.
  Rational e1 = expected_payoff(five, 1, 0, *counter);
  for (int j = 1; j < 5; ++j) {
    CHECK(e1 >= expected_payoff(five, 1, j, *counter));
  }
  // The witness belief (1, 0) from the exact analysis lies on the grid.
  Belief corner{{Rational(1), Rational(0)}};
  Rational at_corner = expected_payoff(five, 1, 0, corner);
  for (int j = 1; j < 5; ++j) {
    CHECK(at_corner > expected_payoff(five, 1, j, corner));
  }

  Game tiny;
  tiny.row_actions = {"only"};
  tiny.col_actions = {"x"};
  tiny.row_payoffs = {{Rational(0)}};
  tiny.col_payoffs = {{Rational(0)}};
  auto trivial = grid_check_nbr(tiny, 1, 0, GridSpec{1});
  CHECK(trivial.has_value());  // a lone action is best at every belief
}

TEST_CASE("exhaustive verification accepts sound certificates") {
  Game fig = paper_example("fig1");
  DominanceCertificate good;
  good.dominated = 2;
  good.mixture.weights = {{0, Rational(1, 3)}, {1, Rational(2, 3)}};
  good.margin = Rational(1, 3);
  CHECK(verify_dominance_exhaustive(fig, 1, good, GridSpec{12}));

  DominanceCertificate pure;
  Game g;
  g.row_actions = {"a", "b"};
  g.col_actions = {"x", "y"};
  g.row_payoffs = {{Rational(2), Rational(2)}, {Rational(1), Rational(1)}};
  g.col_payoffs = {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
  pure.dominated = 1;
  pure.mixture.weights = {{0, Rational(1)}};
  pure.margin = Rational(1);
  CHECK(verify_dominance_exhaustive(g, 1, pure, GridSpec{8}));
}

TEST_CASE("exhaustive verification rejects tampered certificates") {
  Game fig = paper_example("fig1");
  DominanceCertificate bad;
  bad.dominated = 2;
  bad.mixture.weights = {{0, Rational(9, 10)}, {1, Rational(1, 10)}};
  bad.margin = Rational(1, 10);
  CHECK_FALSE(verify_dominance_exhaustive(fig, 1, bad, GridSpec{12}));

  DominanceCertificate inflated;
  inflated.dominated = 2;
  inflated.mixture.weights = {{0, Rational(1, 3)}, {1, Rational(2, 3)}};
  inflated.margin = Rational(1, 2);  // larger than the true margin 1/3
  CHECK_FALSE(verify_dominance_exhaustive(fig, 1, inflated, GridSpec{12}));
}

TEST_CASE("oracle agrees with the pipeline on random games") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<std::uint64_t> seeds;
  for (int trial = 0; trial < 15; ++trial) {
    Game g = random_game(4, 3, seeds(rng), -5, 5);
    for (int i = 0; i < g.rows(); ++i) {
      std::vector<int> allowed;
      for (int j = 0; j < g.rows(); ++j) {
        if (j != i) allowed.push_back(j);
      }
      auto cert = find_dominating_mixture(g, 1, i, allowed);
      auto min_support = enumerate_min_support(g, 1, i);
      CHECK(cert.has_value() == min_support.has_value());
      if (cert) {
        auto red = reduce_support(g, 1, *cert);
        CHECK(static_cast<int>(red.mixture.weights.size()) >= *min_support);
        CHECK(static_cast<int>(red.mixture.weights.size()) <=
              std::min(g.rows() - 1, g.cols()));
        CHECK(verify_dominance_exhaustive(g, 1, red, GridSpec{6}));
      }
    }
  }
}
