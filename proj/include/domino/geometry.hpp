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

#ifndef DOMINO_GEOMETRY_HPP
#define DOMINO_GEOMETRY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "domino/lp.hpp"
#include "domino/rational.hpp"

namespace domino {

/// Membership predicate: normal . x < offset (strict).
struct OpenHalfSpace {
  Vec normal;
  Rational offset;
};

/// Intersection of closed half-spaces normal . x <= offset, feasible and
/// bounded. Lower-dimensional sets are fine (equalities as opposing pairs).
class Polytope {
 public:
  struct Constraint {
    Vec normal;
    Rational offset;
  };

  /// Validates feasibility and boundedness by LP; throws std::invalid_argument
  /// otherwise.
  static Polytope make(std::vector<Constraint> constraints, int dim);

  /// The standard probability simplex over `m` coordinates, ambient R^m.
  static Polytope probability_simplex(int m);

  const std::vector<Constraint>& constraints() const { return constraints_; }
  int dim() const { return dim_; }

  std::vector<LinearConstraint> as_linear_constraints() const;

 private:
  Polytope(std::vector<Constraint> constraints, int dim)
      : constraints_(std::move(constraints)), dim_(dim) {}

  std::vector<Constraint> constraints_;
  int dim_;
};

struct RadonPartition {
  std::vector<int> part1, part2;
  Vec witness;
  std::vector<Rational> weights1, weights2;  // parallel to part1 / part2
};

struct SupportReduction {
  std::vector<int> indices;       // into the input point list
  std::vector<Rational> weights;  // parallel to indices, all > 0
};

struct RotationMerge {
  Rational lambda;
  OpenHalfSpace merged;
};

/// Coefficients mu, not all zero, with sum(mu_i x_i) = 0 (and sum(mu_i) = 0
/// in affine mode); nullopt when the points are independent.
std::optional<std::vector<Rational>> linear_dependence(const std::vector<Vec>& points,
                                                       bool affine);

/// Radon partition of >= d+2 distinct points in R^d, via the affine
/// dependence: part1 = positive multipliers, part2 = the rest.
RadonPartition radon_partition(const std::vector<Vec>& points);

/// Reduces a convex representation of x to a sub-support of size <= d+1.
/// Weights must be nonnegative, sum to 1, and reconstruct x exactly.
SupportReduction caratheodory_convex(const Vec& x, const std::vector<Vec>& points,
                                     const std::vector<Rational>& weights);

/// Conical variant with bounded weight sum: weights nonnegative with
/// sum <= 1 reconstructing x != 0; output support <= d, sum never increases.
SupportReduction caratheodory_conical_bounded(const Vec& x,
                                              const std::vector<Vec>& vectors,
                                              const std::vector<Rational>& weights);

/// Exact vertex set via enumeration of d x d constraint subsystems.
std::vector<Vec> polytope_vertices(const Polytope& P);

/// Affine dimension of the feasible set (rank of vertex differences).
int intrinsic_dimension(const Polytope& P);

/// True iff every vertex of P lies strictly inside h.
bool halfspace_covers(const OpenHalfSpace& h, const Polytope& P);

/// nullopt when the union covers P; otherwise an exact uncovered witness
/// point of P, found by LP feasibility over the complements.
std::optional<Vec> union_covers(const std::vector<OpenHalfSpace>& halfspaces,
                                const Polytope& P);

/// Greedy redundancy removal down to a minimal configuration; the result
/// still covers and has size <= intrinsic_dimension(P) + 1.
std::vector<int> minimal_subcover(const std::vector<OpenHalfSpace>& halfspaces,
                                  const Polytope& P);

/// For homogeneous half-spaces a, b whose union covers S: a lambda in [0,1]
/// such that (lambda a + (1-lambda) b) . x < 0 covers S alone. Lambda is the
/// midpoint of the feasible vertex interval, or 0/1 when one side suffices.
RotationMerge rotation_merge(const OpenHalfSpace& a, const OpenHalfSpace& b,
                             const Polytope& S);

}  // namespace domino

#endif  // DOMINO_GEOMETRY_HPP
