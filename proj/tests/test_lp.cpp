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

#include "domino/geometry.hpp"
#include "domino/lp.hpp"

using namespace domino;

namespace {

bool satisfies(const LinearConstraint& c, const Vec& x) {
  Rational lhs = dot(c.normal, x);
  switch (c.rel) {
    case Relation::LessEq:
      return lhs <= c.offset;
    case Relation::Equal:
      return lhs == c.offset;
    case Relation::GreaterEq:
      return lhs >= c.offset;
  }
  return false;
}

bool satisfies_all(const LinearProgram& lp, const Vec& x) {
  for (const auto& c : lp.constraints) {
    if (!satisfies(c, x)) return false;
  }
  for (int i : lp.nonneg) {
    if (x[i] < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("simplex corner optimum") {
  LinearProgram lp;
  lp.objective = {Rational(1), Rational(0)};
  lp.constraints = {{{Rational(1), Rational(1)}, Relation::Equal, Rational(1)}};
  lp.nonneg = {0, 1};
  auto out = lp_maximize(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == Rational(1));
  CHECK(out.solution == Vec{Rational(1), Rational(0)});
}

TEST_CASE("contradictory bounds are infeasible") {
  LinearProgram lp;
  lp.objective = {Rational(1)};
  lp.constraints = {
      {{Rational(1)}, Relation::GreaterEq, Rational(2)},
      {{Rational(1)}, Relation::LessEq, Rational(1)},
  };
  auto out = lp_maximize(lp);
  CHECK(out.status == LpStatus::Infeasible);
}

TEST_CASE("epsilon program for a strict-dominance margin") {
  // max eps s.t. 6p + 2(1-p) >= 3 + eps, 5(1-p) >= 3 + eps, 0 <= p <= 1.
  // Variables (p, eps); eps free, p >= 0.
  LinearProgram lp;
  lp.objective = {Rational(0), Rational(1)};
  lp.constraints = {
      {{Rational(4), Rational(-1)}, Relation::GreaterEq, Rational(1)},
      {{Rational(-5), Rational(-1)}, Relation::GreaterEq, Rational(-2)},
      {{Rational(1), Rational(0)}, Relation::LessEq, Rational(1)},
  };
  lp.nonneg = {0};
  auto out = lp_maximize(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == Rational(1, 3));
  CHECK(out.solution[0] == Rational(1, 3));
}

TEST_CASE("unbounded program reports an improving ray") {
  LinearProgram lp;
  lp.objective = {Rational(1)};
  lp.constraints = {{{Rational(1)}, Relation::GreaterEq, Rational(0)}};
  lp.nonneg = {0};
  auto out = lp_maximize(lp);
  REQUIRE(out.status == LpStatus::Unbounded);
  CHECK(dot(lp.objective, out.solution) > 0);
}

TEST_CASE("feasible point: dominance half-space complements on the simplex") {
  std::vector<LinearConstraint> cs = {
      {{Rational(1), Rational(1)}, Relation::Equal, Rational(1)},
      {{Rational(1), Rational(0)}, Relation::GreaterEq, Rational(0)},
      {{Rational(0), Rational(1)}, Relation::GreaterEq, Rational(0)},
      {{Rational(-3), Rational(3)}, Relation::GreaterEq, Rational(0)},
      {{Rational(1), Rational(-2)}, Relation::GreaterEq, Rational(0)},
  };
  CHECK_FALSE(lp_feasible_point(cs, 2).has_value());
}

TEST_CASE("feasible point on the simplex") {
  std::vector<LinearConstraint> cs = {
      {{Rational(1), Rational(1)}, Relation::Equal, Rational(1)},
      {{Rational(1), Rational(0)}, Relation::GreaterEq, Rational(0)},
      {{Rational(0), Rational(1)}, Relation::GreaterEq, Rational(0)},
  };
  auto p = lp_feasible_point(cs, 2);
  REQUIRE(p.has_value());
  CHECK((*p)[0] + (*p)[1] == Rational(1));
  CHECK((*p)[0] >= 0);
  CHECK((*p)[1] >= 0);

  cs.push_back({{Rational(1), Rational(0)}, Relation::GreaterEq, Rational(1, 4)});
  auto q = lp_feasible_point(cs, 2);
  REQUIRE(q.has_value());
  CHECK((*q)[0] >= Rational(1, 4));
}

TEST_CASE("optimal solutions satisfy every constraint exactly") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    // Random objective over a box [0, 3]^3: always feasible and bounded.
    LinearProgram lp;
    lp.objective = {Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng))};
    for (int i = 0; i < 3; ++i) {
      Vec n(3, Rational(0));
      n[i] = 1;
      lp.constraints.push_back({n, Relation::LessEq, Rational(3)});
    }
    lp.nonneg = {0, 1, 2};
    auto out = lp_maximize(lp);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(satisfies_all(lp, out.solution));
    CHECK(dot(lp.objective, out.solution) == out.value);

    // Optimality cross-check against exhaustive vertex enumeration.
    std::vector<Polytope::Constraint> pcs;
    for (int i = 0; i < 3; ++i) {
      Vec up(3, Rational(0)), down(3, Rational(0));
      up[i] = 1;
      down[i] = -1;
      pcs.push_back({up, Rational(3)});
      pcs.push_back({down, Rational(0)});
    }
    auto box = Polytope::make(pcs, 3);
    for (const auto& v : polytope_vertices(box)) {
      CHECK(dot(lp.objective, v) <= out.value);
    }

    // Determinism: identical program, identical outcome.
    auto again = lp_maximize(lp);
    CHECK(again.status == out.status);
    CHECK(again.solution == out.solution);
    CHECK(again.value == out.value);
  }
}

TEST_CASE("degenerate equality system solves exactly") {
  // x1 + x2 = 1, x1 - x2 = 0 -> unique point (1/2, 1/2).
  LinearProgram lp;
  lp.objective = {Rational(3), Rational(-2)};
  lp.constraints = {
      {{Rational(1), Rational(1)}, Relation::Equal, Rational(1)},
      {{Rational(1), Rational(-1)}, Relation::Equal, Rational(0)},
  };
  auto out = lp_maximize(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.solution == Vec{Rational(1, 2), Rational(1, 2)});
  CHECK(out.value == Rational(1, 2));
}
