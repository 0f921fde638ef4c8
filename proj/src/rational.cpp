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

#include "domino/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace domino {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    Rational r{mpz_class(num), mpz_class(den)};
    if (r.get_den() == 0) {
      throw std::invalid_argument("zero denominator: " + text);
    }
    r.canonicalize();
    return r;
  }

  auto point = text.find('.');
  if (point != std::string::npos) {
    std::string whole = text.substr(0, point);
    std::string frac = text.substr(point + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      whole = whole.substr(1);
    }
    if (whole.empty()) whole = "0";
    if (frac.empty() || !is_integer_literal(whole) || !is_integer_literal(frac)) {
      throw std::invalid_argument("malformed decimal literal: " + text);
    }
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    mpz_class num = mpz_class(whole) * den + mpz_class(frac);
    if (negative) num = -num;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (!is_integer_literal(text)) {
    throw std::invalid_argument("malformed numeral: " + text);
  }
  return Rational(mpz_class(text));
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Rational& c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool is_zero_vec(const Vec& a) {
  for (const auto& x : a) {
    if (x != 0) return false;
  }
  return true;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_fraction_string(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace domino
