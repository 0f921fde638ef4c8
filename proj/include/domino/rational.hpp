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

#ifndef DOMINO_RATIONAL_HPP
#define DOMINO_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace domino {

// Exact rational number. mpq_class keeps values canonical (gcd 1, positive
// denominator) as long as canonicalize() is called after raw construction;
// all helpers below return canonical values.
using Rational = mpq_class;

// A point / vector with exact rational coordinates.
using Vec = std::vector<Rational>;

/// Parses "p/q", integer, or decimal ("1.2" -> 6/5) literals exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form, e.g. "6/5", "3/1", "-1/2".
std::string to_fraction_string(const Rational& r);

Rational dot(const Vec& a, const Vec& b);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& a);

bool is_zero_vec(const Vec& a);

std::string to_string(const Vec& v);

}  // namespace domino

#endif  // DOMINO_RATIONAL_HPP
