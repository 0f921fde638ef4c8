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

#include "domino/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace domino {

namespace {

// Dense tableau for the standard-form problem: all variables >= 0,
// equality rows Ax = b with b >= 0. Free original variables are split into
// positive and negative parts before reaching the tableau.
struct Tableau {
  // rows[r] holds the constraint coefficients; rhs last would complicate
  // pivoting helpers, so rhs is kept separately.
  std::vector<Vec> rows;
  std::vector<Rational> rhs;
  Vec obj;         // reduced-cost row: z_j - c_j
  Rational objval = 0;  // current objective value
  std::vector<int> basis;       // basis[r] = column basic in row r
  std::vector<bool> blocked;    // columns barred from entering (artificials)

  int cols() const { return static_cast<int>(obj.size()); }

  void pivot(int r, int c) {
    Rational piv = rows[r][c];
    Rational inv = 1 / piv;
    for (auto& x : rows[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (static_cast<int>(k) == r) continue;
      Rational f = rows[k][c];
      if (f == 0) continue;
      for (int j = 0; j < cols(); ++j) rows[k][j] -= f * rows[r][j];
      rhs[k] -= f * rhs[r];
    }
    Rational f = obj[c];
    if (f != 0) {
      for (int j = 0; j < cols(); ++j) obj[j] -= f * rows[r][j];
      objval -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Bland's rule: entering = lowest-index column with negative reduced cost;
  // leaving = min-ratio row, ties broken by lowest basic-variable index.
  // Returns Optimal, Unbounded (ray column in *ray_col), or loops via pivots.
  LpStatus run(int* ray_col) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols(); ++j) {
        if (!blocked[j] && obj[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      int leave = -1;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][enter] > 0) {
          Rational ratio = rhs[r] / rows[r][enter];
          if (leave < 0 || ratio < best_ratio ||
              (ratio == best_ratio && basis[r] < basis[leave])) {
            leave = static_cast<int>(r);
            best_ratio = ratio;
          }
        }
      }
      if (leave < 0) {
        if (ray_col) *ray_col = enter;
        return LpStatus::Unbounded;
      }
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpOutcome lp_maximize(const LinearProgram& lp) {
  const int n = static_cast<int>(lp.objective.size());
  for (const auto& c : lp.constraints) {
    if (static_cast<int>(c.normal.size()) != n) {
      throw std::invalid_argument("lp_maximize: constraint dimension mismatch");
    }
  }
  std::vector<bool> is_nonneg(n, false);
  for (int i : lp.nonneg) {
    if (i < 0 || i >= n) throw std::invalid_argument("lp_maximize: bad nonneg index");
    is_nonneg[i] = true;
  }

  // Column layout: structural columns first (free vars split in two),
  // then slacks/surpluses, then artificials.
  std::vector<int> pos_col(n), neg_col(n, -1);
  int ncols = 0;
  for (int i = 0; i < n; ++i) {
    pos_col[i] = ncols++;
    if (!is_nonneg[i]) neg_col[i] = ncols++;
  }
  const int structural = ncols;

  const int m = static_cast<int>(lp.constraints.size());
  std::vector<Vec> rows(m);
  std::vector<Rational> rhs(m);
  std::vector<Relation> rel(m);
  for (int r = 0; r < m; ++r) {
    const auto& c = lp.constraints[r];
    Vec row(structural, Rational(0));
    for (int i = 0; i < n; ++i) {
      row[pos_col[i]] = c.normal[i];
      if (neg_col[i] >= 0) row[neg_col[i]] = -c.normal[i];
    }
    Rational b = c.offset;
    Relation rl = c.rel;
    if (b < 0) {
      for (auto& x : row) x = -x;
      b = -b;
      if (rl == Relation::LessEq) rl = Relation::GreaterEq;
      else if (rl == Relation::GreaterEq) rl = Relation::LessEq;
    }
    rows[r] = std::move(row);
    rhs[r] = b;
    rel[r] = rl;
  }

  // Slack / surplus columns.
  int nslack = 0;
  std::vector<int> slack_col(m, -1);
  for (int r = 0; r < m; ++r) {
    if (rel[r] != Relation::Equal) slack_col[r] = structural + nslack++;
  }
  // Artificial columns for >= and = rows.
  int nart = 0;
  std::vector<int> art_col(m, -1);
  for (int r = 0; r < m; ++r) {
    if (rel[r] != Relation::LessEq) art_col[r] = structural + nslack + nart++;
  }
  const int total = structural + nslack + nart;

  Tableau t;
  t.rows.resize(m);
  t.rhs = rhs;
  t.basis.resize(m);
  t.blocked.assign(total, false);
  for (int r = 0; r < m; ++r) {
    Vec row(total, Rational(0));
    std::copy(rows[r].begin(), rows[r].end(), row.begin());
    if (slack_col[r] >= 0) {
      row[slack_col[r]] = (rel[r] == Relation::LessEq) ? 1 : -1;
    }
    if (art_col[r] >= 0) row[art_col[r]] = 1;
    t.rows[r] = std::move(row);
    t.basis[r] = (rel[r] == Relation::LessEq) ? slack_col[r] : art_col[r];
  }

  // Phase 1: maximize -sum(artificials).
  if (nart > 0) {
    t.obj.assign(total, Rational(0));
    t.objval = 0;
    for (int r = 0; r < m; ++r) {
      if (art_col[r] >= 0) t.obj[art_col[r]] = 1;  // z_j - c_j with c = -1
    }
    // Price out the artificial basic columns.
    for (int r = 0; r < m; ++r) {
      if (t.basis[r] == art_col[r] && art_col[r] >= 0) {
        for (int j = 0; j < total; ++j) t.obj[j] -= t.rows[r][j];
        t.objval -= t.rhs[r];
      }
    }
    LpStatus st = t.run(nullptr);
    if (st != LpStatus::Optimal) {
      throw std::logic_error("lp_maximize: phase 1 cannot be unbounded");
    }
    if (t.objval != 0) {
      LpOutcome out;
      out.status = LpStatus::Infeasible;
      return out;
    }
    // Drive leftover artificials out of the basis; drop redundant rows.
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r) {
      if (t.basis[r] < structural + nslack) continue;
      int piv = -1;
      for (int j = 0; j < structural + nslack; ++j) {
        if (t.rows[r][j] != 0) {
          piv = j;
          break;
        }
      }
      if (piv >= 0) {
        t.pivot(r, piv);
      } else {
        t.rows.erase(t.rows.begin() + r);
        t.rhs.erase(t.rhs.begin() + r);
        t.basis.erase(t.basis.begin() + r);
      }
    }
    for (int j = structural + nslack; j < total; ++j) t.blocked[j] = true;
  }

  // Phase 2.
  t.obj.assign(total, Rational(0));
  t.objval = 0;
  for (int i = 0; i < n; ++i) {
    t.obj[pos_col[i]] = -lp.objective[i];
    if (neg_col[i] >= 0) t.obj[neg_col[i]] = lp.objective[i];
  }
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Rational f = t.obj[t.basis[r]];
    if (f != 0) {
      for (int j = 0; j < total; ++j) t.obj[j] -= f * t.rows[r][j];
      t.objval -= f * t.rhs[r];
    }
  }

  int ray_col = -1;
  LpStatus st = t.run(&ray_col);

  LpOutcome out;
  if (st == LpStatus::Unbounded) {
    // Improving ray: entering variable moves +1, basic variables adjust.
    Vec std_dir(total, Rational(0));
    std_dir[ray_col] = 1;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      std_dir[t.basis[r]] = -t.rows[r][ray_col];
    }
    Vec ray(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      ray[i] = std_dir[pos_col[i]];
      if (neg_col[i] >= 0) ray[i] -= std_dir[neg_col[i]];
    }
    out.status = LpStatus::Unbounded;
    out.solution = std::move(ray);
    return out;
  }

  Vec std_x(total, Rational(0));
  for (std::size_t r = 0; r < t.rows.size(); ++r) std_x[t.basis[r]] = t.rhs[r];
  Vec x(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    x[i] = std_x[pos_col[i]];
    if (neg_col[i] >= 0) x[i] -= std_x[neg_col[i]];
  }
  out.status = LpStatus::Optimal;
  out.solution = std::move(x);
  out.value = dot(lp.objective, out.solution);
  return out;
}

std::optional<Vec> lp_feasible_point(const std::vector<LinearConstraint>& constraints,
                                     int dim) {
  LinearProgram lp;
  lp.objective.assign(dim, Rational(0));
  lp.constraints = constraints;
  LpOutcome out = lp_maximize(lp);
  if (out.status == LpStatus::Infeasible) return std::nullopt;
  return out.solution;
}

}  // namespace domino
