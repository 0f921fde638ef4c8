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

#include "domino/rational.hpp"

using namespace domino;

TEST_CASE("decimal literals parse exactly") {
  CHECK(parse_rational("1.2") == Rational(6, 5));
  CHECK(parse_rational("0.55") == Rational(11, 20));
  CHECK(parse_rational("-0.8") == Rational(-4, 5));
  CHECK(parse_rational("-1.03") == Rational(-103, 100));
  CHECK(parse_rational("0.5") == parse_rational("1/2"));
}

TEST_CASE("fraction and integer literals") {
  CHECK(parse_rational("6/5") == Rational(6, 5));
  CHECK(parse_rational("-3/9") == Rational(-1, 3));  // canonicalized
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-12") == Rational(-12));
}

TEST_CASE("malformed literals are rejected") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2."), std::invalid_argument);
}

TEST_CASE("canonical fraction strings") {
  CHECK(to_fraction_string(Rational(6, 5)) == "6/5");
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_fraction_string(parse_rational("4/8")) == "1/2");
}

TEST_CASE("vector helpers") {
  Vec a{Rational(1), Rational(2)};
  Vec b{Rational(3), Rational(-1)};
  CHECK(dot(a, b) == Rational(1));
  CHECK(add(a, b) == Vec{Rational(4), Rational(1)});
  CHECK(sub(a, b) == Vec{Rational(-2), Rational(3)});
  CHECK(scale(Rational(1, 2), a) == Vec{Rational(1, 2), Rational(1)});
  CHECK(is_zero_vec(Vec{Rational(0), Rational(0)}));
  CHECK_FALSE(is_zero_vec(a));
  CHECK_THROWS_AS(dot(a, Vec{Rational(1)}), std::invalid_argument);
}
