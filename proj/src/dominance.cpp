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

#include "domino/dominance.hpp"

#include <algorithm>
#include <stdexcept>

#include "domino/geometry.hpp"
#include "domino/lp.hpp"

namespace domino {

namespace {

// Payoff vector of the mixture with action i folded out (renormalized).
// Returns false when the mixture is a point mass on i itself.
bool fold_out(const Game& g, int player, const MixedStrategy& mixture, int i,
              std::vector<std::pair<int, Rational>>* folded) {
  Rational pi = 0;
  for (const auto& [j, w] : mixture.weights) {
    if (j == i) pi = w;
  }
  if (pi == 1) return false;
  folded->clear();
  for (const auto& [j, w] : mixture.weights) {
    if (j != i) folded->push_back({j, w / (1 - pi)});
  }
  return true;
}

Vec mixture_payoff(const Game& g, int player,
                   const std::vector<std::pair<int, Rational>>& weights) {
  const int m = (player == 1) ? g.cols() : g.rows();
  Vec u(m, Rational(0));
  for (const auto& [j, w] : weights) {
    Vec vj = payoff_vector(g, player, j);
    for (int k = 0; k < m; ++k) u[k] += w * vj[k];
  }
  return u;
}

}  // namespace

Game restrict_game(const Game& g, const std::vector<int>& row_keep,
                   const std::vector<int>& col_keep) {
  Game out;
  out.title = g.title;
  for (int r : row_keep) {
    out.row_actions.push_back(g.row_actions[r]);
    Vec rrow, crow;
    for (int c : col_keep) {
      rrow.push_back(g.row_payoffs[r][c]);
      crow.push_back(g.col_payoffs[r][c]);
    }
    out.row_payoffs.push_back(std::move(rrow));
    out.col_payoffs.push_back(std::move(crow));
  }
  for (int c : col_keep) out.col_actions.push_back(g.col_actions[c]);
  validate_game(out);
  return out;
}

bool pure_dominates(const Game& g, int player, int i, int j) {
  if (i == j) throw std::invalid_argument("pure_dominates: i == j");
  Vec vi = payoff_vector(g, player, i);
  Vec vj = payoff_vector(g, player, j);
  for (std::size_t k = 0; k < vi.size(); ++k) {
    if (vj[k] <= vi[k]) return false;
  }
  return true;
}

bool mixed_dominates(const Game& g, int player, const MixedStrategy& mixture, int i) {
  validate_mixed_strategy(g, player, mixture);
  std::vector<std::pair<int, Rational>> folded;
  if (!fold_out(g, player, mixture, i, &folded)) return false;
  Vec u = mixture_payoff(g, player, folded);
  Vec vi = payoff_vector(g, player, i);
  for (std::size_t k = 0; k < vi.size(); ++k) {
    if (u[k] <= vi[k]) return false;
  }
  return true;
}

std::optional<DominanceCertificate> find_dominating_mixture(
    const Game& g, int player, int i, const std::vector<int>& allowed) {
  if (allowed.empty()) {
    throw std::invalid_argument("find_dominating_mixture: empty allowed set");
  }
  for (int j : allowed) {
    if (j == i) {
      throw std::invalid_argument("find_dominating_mixture: allowed contains i");
    }
    if (j < 0 || j >= g.actions(player)) {
      throw std::out_of_range("find_dominating_mixture: bad allowed index");
    }
  }
  const int k = static_cast<int>(allowed.size());
  const int m = (player == 1) ? g.cols() : g.rows();
  Vec vi = payoff_vector(g, player, i);
  std::vector<Vec> vs;
  for (int j : allowed) vs.push_back(payoff_vector(g, player, j));

  // Variables: p_0..p_{k-1} (>= 0), eps (free, last).
  LinearProgram lp;
  lp.objective.assign(k + 1, Rational(0));
  lp.objective[k] = 1;
  for (int j = 0; j < k; ++j) lp.nonneg.push_back(j);
  for (int c = 0; c < m; ++c) {
    Vec row(k + 1, Rational(0));
    for (int j = 0; j < k; ++j) row[j] = vs[j][c];
    row[k] = -1;
    lp.constraints.push_back({std::move(row), Relation::GreaterEq, vi[c]});
  }
  Vec sum_row(k + 1, Rational(0));
  for (int j = 0; j < k; ++j) sum_row[j] = 1;
  lp.constraints.push_back({std::move(sum_row), Relation::Equal, Rational(1)});

  LpOutcome out = lp_maximize(lp);
  if (out.status != LpStatus::Optimal) {
    throw std::logic_error("find_dominating_mixture: eps-LP must have an optimum");
  }
  if (out.value <= 0) return std::nullopt;

  DominanceCertificate cert;
  cert.dominated = i;
  cert.margin = out.value;
  for (int j = 0; j < k; ++j) {
    if (out.solution[j] > 0) cert.mixture.weights.push_back({allowed[j], out.solution[j]});
  }
  if (!mixed_dominates(g, player, cert.mixture, i)) {
    throw std::logic_error("find_dominating_mixture: certificate failed re-check");
  }
  return cert;
}

DominanceCertificate reduce_support(const Game& g, int player,
                                    const DominanceCertificate& cert) {
  if (!mixed_dominates(g, player, cert.mixture, cert.dominated)) {
    throw std::invalid_argument("reduce_support: invalid input certificate");
  }
  Game g1 = (player == 1) ? g : transpose(g);
  auto [gn, shift] = normalize_positive(g1, 1);
  const int i = cert.dominated;

  std::vector<Vec> vectors;
  std::vector<Rational> weights;
  std::vector<int> support_actions;
  for (const auto& [j, w] : cert.mixture.weights) {
    support_actions.push_back(j);
    weights.push_back(w);
    vectors.push_back(payoff_vector(gn, 1, j));
  }
  Vec u = mixture_payoff(gn, 1, cert.mixture.weights);

  SupportReduction red = caratheodory_conical_bounded(u, vectors, weights);
  Rational s = 0;
  for (const auto& w : red.weights) s += w;
  if (s <= 0 || s > 1) {
    throw std::logic_error("reduce_support: bad reduced weight sum");
  }

  // Scale back up to a probability vector; with positive payoffs this only
  // raises the mixture's payoff coordinatewise.
  std::vector<std::pair<int, Rational>> scaled;
  for (std::size_t t = 0; t < red.indices.size(); ++t) {
    scaled.push_back({support_actions[red.indices[t]], red.weights[t] / s});
  }

  MixedStrategy reduced;
  Rational pi = 0;
  for (const auto& [j, w] : scaled) {
    if (j == i) pi = w;
  }
  if (pi == 1) throw std::logic_error("reduce_support: mixture collapsed onto i");
  for (const auto& [j, w] : scaled) {
    if (j != i) reduced.weights.push_back({j, w / (1 - pi)});
  }

  // Re-verify against the original game and recompute the exact margin.
  Game g_view = (player == 1) ? g : transpose(g);
  Vec u_orig = mixture_payoff(g_view, 1, reduced.weights);
  Vec vi = payoff_vector(g_view, 1, i);
  Rational margin;
  bool first = true;
  for (std::size_t c = 0; c < vi.size(); ++c) {
    Rational gap = u_orig[c] - vi[c];
    if (first || gap < margin) {
      margin = gap;
      first = false;
    }
  }
  if (margin <= 0) {
    throw std::logic_error("reduce_support: reduced certificate fails verification");
  }

  const int n = g_view.rows();
  const int m = g_view.cols();
  if (static_cast<int>(reduced.weights.size()) > std::min(n - 1, m)) {
    throw std::logic_error("reduce_support: support exceeds min(n-1, m)");
  }
  return {i, std::move(reduced), std::move(margin)};
}

EliminationTrace iesds(const Game& g) {
  validate_game(g);
  std::vector<int> row_surv(g.rows()), col_surv(g.cols());
  for (int r = 0; r < g.rows(); ++r) row_surv[r] = r;
  for (int c = 0; c < g.cols(); ++c) col_surv[c] = c;

  EliminationTrace trace;
  int player = 1;
  int quiet_scans = 0;
  while (quiet_scans < 2) {
    auto& surv = (player == 1) ? row_surv : col_surv;
    Game sub = restrict_game(g, row_surv, col_surv);
    const int count = static_cast<int>(surv.size());

    EliminationRound round;
    round.player = player;
    round.row_survivors = row_surv;
    round.col_survivors = col_surv;
    std::vector<int> removed_local;
    if (count > 1) {
      for (int i = 0; i < count; ++i) {
        std::vector<int> allowed;
        for (int j = 0; j < count; ++j) {
          if (j != i) allowed.push_back(j);
        }
        if (auto cert = find_dominating_mixture(sub, player, i, allowed)) {
          removed_local.push_back(i);
          // Map the certificate back to original action indices.
          DominanceCertificate mapped;
          mapped.dominated = surv[i];
          mapped.margin = cert->margin;
          for (const auto& [j, w] : cert->mixture.weights) {
            mapped.mixture.weights.push_back({surv[j], w});
          }
          round.removed.push_back(surv[i]);
          round.certificates.push_back(std::move(mapped));
        }
      }
    }

    if (removed_local.empty()) {
      ++quiet_scans;
    } else {
      quiet_scans = 0;
      std::vector<int> next;
      for (int i = 0; i < count; ++i) {
        if (!std::binary_search(removed_local.begin(), removed_local.end(), i)) {
          next.push_back(surv[i]);
        }
      }
      surv = std::move(next);
      trace.rounds.push_back(std::move(round));
    }
    player = 3 - player;
  }
  trace.row_survivors = std::move(row_surv);
  trace.col_survivors = std::move(col_surv);
  return trace;
}

}  // namespace domino
