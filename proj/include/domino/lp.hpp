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

#ifndef DOMINO_LP_HPP
#define DOMINO_LP_HPP

#include <optional>
#include <vector>

#include "domino/rational.hpp"

namespace domino {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
  Vec normal;
  Relation rel;
  Rational offset;
};

/// Maximize objective . x subject to the constraints. Variables listed in
/// `nonneg` are additionally constrained to be >= 0; all others are free.
struct LinearProgram {
  Vec objective;
  std::vector<LinearConstraint> constraints;
  std::vector<int> nonneg;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// On Optimal, `solution` satisfies every constraint exactly and `value` is
/// the exact optimum. On Unbounded, `solution` carries an improving ray.
struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Vec solution;
  Rational value;
};

// Two-phase simplex over exact rationals with Bland's anti-cycling rule.
LpOutcome lp_maximize(const LinearProgram& lp);

/// Exact feasible point of the constraint system over `dim` free variables,
/// or nullopt when the system is infeasible.
std::optional<Vec> lp_feasible_point(const std::vector<LinearConstraint>& constraints,
                                     int dim);

}  // namespace domino

#endif  // DOMINO_LP_HPP
