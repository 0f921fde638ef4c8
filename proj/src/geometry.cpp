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

#include "domino/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace domino {

namespace {

void check_common_dimension(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  for (const auto& p : points) {
    if (p.size() != points[0].size()) {
      throw std::invalid_argument("dimension mismatch among points");
    }
  }
}

// One nontrivial kernel vector of the (rows x cols) matrix, or nullopt when
// the kernel is trivial. Exact Gaussian elimination; the first free column
// gets coefficient 1.
std::optional<std::vector<Rational>> kernel_vector(std::vector<Vec> m, int cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int k = r; k < rows; ++k) {
      if (m[k][c] != 0) {
        pr = k;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    Rational inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int k = 0; k < rows; ++k) {
      if (k == r || m[k][c] == 0) continue;
      Rational f = m[k][c];
      for (int j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) return std::nullopt;

  std::vector<Rational> mu(cols, Rational(0));
  mu[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    mu[pivot_col[i]] = -m[i][free_col];
  }
  return mu;
}

// Solves the square system a x = b; nullopt when singular.
std::optional<Vec> solve_square(std::vector<Vec> a, Vec b) {
  const int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int k = c; k < n; ++k) {
      if (a[k][c] != 0) {
        pr = k;
        break;
      }
    }
    if (pr < 0) return std::nullopt;
    std::swap(a[c], a[pr]);
    std::swap(b[c], b[pr]);
    Rational inv = 1 / a[c][c];
    for (int j = c; j < n; ++j) a[c][j] *= inv;
    b[c] *= inv;
    for (int k = 0; k < n; ++k) {
      if (k == c || a[k][c] == 0) continue;
      Rational f = a[k][c];
      for (int j = c; j < n; ++j) a[k][j] -= f * a[c][j];
      b[k] -= f * b[c];
    }
  }
  return b;
}

int matrix_rank(std::vector<Vec> m, int cols) {
  const int rows = static_cast<int>(m.size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pr = -1;
    for (int k = rank; k < rows; ++k) {
      if (m[k][c] != 0) {
        pr = k;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    Rational inv = 1 / m[rank][c];
    for (int j = c; j < cols; ++j) m[rank][j] *= inv;
    for (int k = 0; k < rows; ++k) {
      if (k == rank || m[k][c] == 0) continue;
      Rational f = m[k][c];
      for (int j = c; j < cols; ++j) m[k][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

void validate_convex_input(const Vec& x, const std::vector<Vec>& points,
                           const std::vector<Rational>& weights, bool bounded_sum) {
  check_common_dimension(points);
  if (points[0].size() != x.size()) {
    throw std::invalid_argument("target dimension mismatch");
  }
  if (weights.size() != points.size()) {
    throw std::invalid_argument("weight count mismatch");
  }
  Rational sum = 0;
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("negative weight");
    sum += w;
  }
  if (bounded_sum ? (sum > 1) : (sum != 1)) {
    throw std::invalid_argument("bad weight sum");
  }
  Vec recon(x.size(), Rational(0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = 0; k < x.size(); ++k) recon[k] += weights[i] * points[i][k];
  }
  if (recon != x) throw std::invalid_argument("weights do not reconstruct x");
}

}  // namespace

std::optional<std::vector<Rational>> linear_dependence(const std::vector<Vec>& points,
                                                       bool affine) {
  check_common_dimension(points);
  const int d = static_cast<int>(points[0].size());
  const int n = static_cast<int>(points.size());

  std::vector<Vec> m;
  for (int k = 0; k < d; ++k) {
    Vec row(n);
    for (int i = 0; i < n; ++i) row[i] = points[i][k];
    m.push_back(std::move(row));
  }
  if (affine) m.push_back(Vec(n, Rational(1)));
  return kernel_vector(std::move(m), n);
}

RadonPartition radon_partition(const std::vector<Vec>& points) {
  check_common_dimension(points);
  const int d = static_cast<int>(points[0].size());
  const int n = static_cast<int>(points.size());
  if (n < d + 2) {
    throw std::invalid_argument("radon_partition: need at least d+2 points");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw std::invalid_argument("radon_partition: duplicate points");
      }
    }
  }

  auto dep = linear_dependence(points, /*affine=*/true);
  if (!dep) throw std::logic_error("radon_partition: dependence must exist");
  std::vector<Rational> mu = *dep;

  bool has_positive = std::any_of(mu.begin(), mu.end(),
                                  [](const Rational& v) { return v > 0; });
  if (!has_positive) {
    for (auto& v : mu) v = -v;
  }

  RadonPartition rp;
  Rational a_sum = 0;
  for (int i = 0; i < n; ++i) {
    if (mu[i] > 0) a_sum += mu[i];
  }
  rp.witness.assign(d, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (mu[i] > 0) {
      rp.part1.push_back(i);
      Rational w = mu[i] / a_sum;
      rp.weights1.push_back(w);
      for (int k = 0; k < d; ++k) rp.witness[k] += w * points[i][k];
    } else {
      rp.part2.push_back(i);
      rp.weights2.push_back(-mu[i] / a_sum);
    }
  }
  if (rp.part2.empty()) {
    throw std::logic_error("radon_partition: degenerate sign split");
  }
  return rp;
}

SupportReduction caratheodory_convex(const Vec& x, const std::vector<Vec>& points,
                                     const std::vector<Rational>& weights) {
  validate_convex_input(x, points, weights, /*bounded_sum=*/false);
  const int d = static_cast<int>(x.size());

  std::vector<int> support;
  std::vector<Rational> lambda;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0) {
      support.push_back(static_cast<int>(i));
      lambda.push_back(weights[i]);
    }
  }

  while (static_cast<int>(support.size()) > d + 1) {
    std::vector<Vec> pts;
    for (int i : support) pts.push_back(points[i]);
    auto dep = linear_dependence(pts, /*affine=*/true);
    if (!dep) break;  // affinely independent, cannot happen above d+1
    std::vector<Rational> mu = *dep;
    if (std::none_of(mu.begin(), mu.end(), [](const Rational& v) { return v > 0; })) {
      for (auto& v : mu) v = -v;
    }

    // alpha = min lambda_j / mu_j over mu_j > 0; ties resolved by position,
    // which is the smallest original index (support is kept sorted).
    int arg = -1;
    Rational alpha;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (mu[j] > 0) {
        Rational ratio = lambda[j] / mu[j];
        if (arg < 0 || ratio < alpha) {
          arg = static_cast<int>(j);
          alpha = ratio;
        }
      }
    }
    for (std::size_t j = 0; j < mu.size(); ++j) lambda[j] -= alpha * mu[j];

    std::vector<int> next_support;
    std::vector<Rational> next_lambda;
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (lambda[j] > 0) {
        next_support.push_back(support[j]);
        next_lambda.push_back(lambda[j]);
      }
    }
    support = std::move(next_support);
    lambda = std::move(next_lambda);
  }
  return {std::move(support), std::move(lambda)};
}

SupportReduction caratheodory_conical_bounded(const Vec& x,
                                              const std::vector<Vec>& vectors,
                                              const std::vector<Rational>& weights) {
  if (is_zero_vec(x)) {
    throw std::invalid_argument("caratheodory_conical_bounded: x must be nonzero");
  }
  validate_convex_input(x, vectors, weights, /*bounded_sum=*/true);
  const int d = static_cast<int>(x.size());

  std::vector<int> support;
  std::vector<Rational> lambda;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0) {
      support.push_back(static_cast<int>(i));
      lambda.push_back(weights[i]);
    }
  }

  while (static_cast<int>(support.size()) > d) {
    std::vector<Vec> vecs;
    for (int i : support) vecs.push_back(vectors[i]);
    auto dep = linear_dependence(vecs, /*affine=*/false);
    if (!dep) break;  // linearly independent, cannot happen above d
    std::vector<Rational> mu = *dep;

    // Orientation: keep sum(mu) >= 0 so the weight sum never increases,
    // and make sure some mu is positive.
    Rational mu_sum = 0;
    for (const auto& v : mu) mu_sum += v;
    if (mu_sum < 0) {
      for (auto& v : mu) v = -v;
    } else if (mu_sum == 0 &&
               std::none_of(mu.begin(), mu.end(),
                            [](const Rational& v) { return v > 0; })) {
      for (auto& v : mu) v = -v;
    }

    int arg = -1;
    Rational alpha;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (mu[j] > 0) {
        Rational ratio = lambda[j] / mu[j];
        if (arg < 0 || ratio < alpha) {
          arg = static_cast<int>(j);
          alpha = ratio;
        }
      }
    }
    for (std::size_t j = 0; j < mu.size(); ++j) lambda[j] -= alpha * mu[j];

    std::vector<int> next_support;
    std::vector<Rational> next_lambda;
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (lambda[j] > 0) {
        next_support.push_back(support[j]);
        next_lambda.push_back(lambda[j]);
      }
    }
    support = std::move(next_support);
    lambda = std::move(next_lambda);
  }
  return {std::move(support), std::move(lambda)};
}

Polytope Polytope::make(std::vector<Constraint> constraints, int dim) {
  if (dim < 1) throw std::invalid_argument("Polytope: dimension must be positive");
  for (const auto& c : constraints) {
    if (static_cast<int>(c.normal.size()) != dim) {
      throw std::invalid_argument("Polytope: constraint dimension mismatch");
    }
  }
  Polytope p(std::move(constraints), dim);
  auto lcs = p.as_linear_constraints();
  if (!lp_feasible_point(lcs, dim)) {
    throw std::invalid_argument("Polytope: infeasible constraint set");
  }
  for (int i = 0; i < dim; ++i) {
    for (int sign : {1, -1}) {
      LinearProgram lp;
      lp.objective.assign(dim, Rational(0));
      lp.objective[i] = sign;
      lp.constraints = lcs;
      if (lp_maximize(lp).status == LpStatus::Unbounded) {
        throw std::invalid_argument("Polytope: unbounded constraint set");
      }
    }
  }
  return p;
}

Polytope Polytope::probability_simplex(int m) {
  std::vector<Constraint> cs;
  for (int k = 0; k < m; ++k) {
    Vec n(m, Rational(0));
    n[k] = -1;
    cs.push_back({std::move(n), Rational(0)});
  }
  cs.push_back({Vec(m, Rational(1)), Rational(1)});
  cs.push_back({Vec(m, Rational(-1)), Rational(-1)});
  return make(std::move(cs), m);
}

std::vector<LinearConstraint> Polytope::as_linear_constraints() const {
  std::vector<LinearConstraint> out;
  out.reserve(constraints_.size());
  for (const auto& c : constraints_) {
    out.push_back({c.normal, Relation::LessEq, c.offset});
  }
  return out;
}

std::vector<Vec> polytope_vertices(const Polytope& P) {
  const int d = P.dim();
  const auto& cs = P.constraints();
  const int n = static_cast<int>(cs.size());
  if (n < d) return {};

  std::set<Vec> found;
  std::vector<int> pick(d);
  for (int i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    std::vector<Vec> a;
    Vec b;
    for (int i : pick) {
      a.push_back(cs[i].normal);
      b.push_back(cs[i].offset);
    }
    if (auto x = solve_square(std::move(a), std::move(b))) {
      bool feasible = true;
      for (const auto& c : cs) {
        if (dot(c.normal, *x) > c.offset) {
          feasible = false;
          break;
        }
      }
      if (feasible) found.insert(std::move(*x));
    }

    // next combination
    int i = d - 1;
    while (i >= 0 && pick[i] == n - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

int intrinsic_dimension(const Polytope& P) {
  auto verts = polytope_vertices(P);
  if (verts.empty()) {
    throw std::logic_error("intrinsic_dimension: no vertices");
  }
  std::vector<Vec> diffs;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    diffs.push_back(sub(verts[i], verts[0]));
  }
  if (diffs.empty()) return 0;
  return matrix_rank(std::move(diffs), P.dim());
}

bool halfspace_covers(const OpenHalfSpace& h, const Polytope& P) {
  if (static_cast<int>(h.normal.size()) != P.dim()) {
    throw std::invalid_argument("halfspace_covers: dimension mismatch");
  }
  for (const auto& v : polytope_vertices(P)) {
    if (dot(h.normal, v) >= h.offset) return false;
  }
  return true;
}

std::optional<Vec> union_covers(const std::vector<OpenHalfSpace>& halfspaces,
                                const Polytope& P) {
  auto cs = P.as_linear_constraints();
  for (const auto& h : halfspaces) {
    if (static_cast<int>(h.normal.size()) != P.dim()) {
      throw std::invalid_argument("union_covers: dimension mismatch");
    }
    cs.push_back({h.normal, Relation::GreaterEq, h.offset});
  }
  return lp_feasible_point(cs, P.dim());
}

std::vector<int> minimal_subcover(const std::vector<OpenHalfSpace>& halfspaces,
                                  const Polytope& P) {
  if (union_covers(halfspaces, P)) {
    throw std::invalid_argument("minimal_subcover: input does not cover P");
  }
  std::vector<int> kept(halfspaces.size());
  for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = static_cast<int>(i);

  // Dropping members only shrinks the union, so a single forward pass
  // reaches a minimal configuration.
  for (std::size_t pos = 0; pos < kept.size();) {
    std::vector<OpenHalfSpace> rest;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != pos) rest.push_back(halfspaces[kept[j]]);
    }
    if (!rest.empty() && !union_covers(rest, P)) {
      kept.erase(kept.begin() + pos);
    } else {
      ++pos;
    }
  }

  int bound = intrinsic_dimension(P) + 1;
  if (static_cast<int>(kept.size()) > bound) {
    throw std::logic_error("minimal_subcover: result exceeds the d+1 bound");
  }
  return kept;
}

RotationMerge rotation_merge(const OpenHalfSpace& a, const OpenHalfSpace& b,
                             const Polytope& S) {
  if (a.offset != 0 || b.offset != 0) {
    throw std::invalid_argument("rotation_merge: half-spaces must be homogeneous");
  }
  if (union_covers({a, b}, S)) {
    throw std::invalid_argument("rotation_merge: union does not cover S");
  }
  auto verts = polytope_vertices(S);

  bool a_alone = true, b_alone = true;
  for (const auto& v : verts) {
    if (dot(a.normal, v) >= 0) a_alone = false;
    if (dot(b.normal, v) >= 0) b_alone = false;
  }
  if (a_alone) return {Rational(1), a};
  if (b_alone) return {Rational(0), b};

  // Open interval of feasible lambda: for each vertex v with alpha = a.v,
  // beta = b.v, require lambda*alpha + (1-lambda)*beta < 0.
  Rational lo = 0, hi = 1;
  for (const auto& v : verts) {
    Rational alpha = dot(a.normal, v);
    Rational beta = dot(b.normal, v);
    Rational diff = alpha - beta;
    if (diff > 0) {
      Rational bound = -beta / diff;
      if (bound < hi) hi = bound;
    } else if (diff < 0) {
      Rational bound = -beta / diff;
      if (bound > lo) lo = bound;
    } else if (alpha >= 0) {
      throw std::invalid_argument("rotation_merge: vertex covered by neither half-space");
    }
  }
  if (lo >= hi) {
    throw std::logic_error("rotation_merge: empty feasible interval");
  }
  Rational lambda = (lo + hi) / 2;
  OpenHalfSpace merged{add(scale(lambda, a.normal), scale(1 - lambda, b.normal)),
                       Rational(0)};
  if (!halfspace_covers(merged, S)) {
    throw std::logic_error("rotation_merge: merged half-space fails to cover");
  }
  return {std::move(lambda), std::move(merged)};
}

}  // namespace domino
