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

#include "domino/rationalizability.hpp"

#include <algorithm>
#include <stdexcept>

#include "domino/lp.hpp"

namespace domino {

namespace {

// Verifies the covering invariant of an NBR certificate.
void check_covering(const std::vector<OpenHalfSpace>& hs, const Polytope& simplex) {
  if (union_covers(hs, simplex)) {
    throw std::invalid_argument("NBR certificate: half-spaces do not cover the simplex");
  }
}

}  // namespace

std::variant<BestResponseWitness, NbrCertificate> best_response_belief(
    const Game& g, int player, int i) {
  const Game view = (player == 1) ? g : transpose(g);
  const int n = view.rows();
  const int m = view.cols();
  if (i < 0 || i >= n) {
    throw std::out_of_range("best_response_belief: action index out of range");
  }
  Vec vi = payoff_vector(view, 1, i);

  std::vector<LinearConstraint> cs;
  for (int k = 0; k < m; ++k) {
    Vec e(m, Rational(0));
    e[k] = 1;
    cs.push_back({std::move(e), Relation::GreaterEq, Rational(0)});
  }
  cs.push_back({Vec(m, Rational(1)), Relation::Equal, Rational(1)});
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    cs.push_back({sub(vi, payoff_vector(view, 1, j)), Relation::GreaterEq, Rational(0)});
  }

  if (auto q = lp_feasible_point(cs, m)) {
    BestResponseWitness w;
    w.action = i;
    w.belief.probs = *q;
    for (int j = 0; j < n; ++j) {
      w.slack.push_back(dot(sub(vi, payoff_vector(view, 1, j)), *q));
    }
    return w;
  }

  NbrCertificate cert;
  cert.action = i;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    Vec normal = sub(vi, payoff_vector(view, 1, j));
    if (is_zero_vec(normal)) continue;  // duplicate payoff row, empty half-space
    cert.covering.push_back({j, OpenHalfSpace{std::move(normal), Rational(0)}});
  }
  std::vector<OpenHalfSpace> hs;
  for (const auto& [j, h] : cert.covering) hs.push_back(h);
  check_covering(hs, Polytope::probability_simplex(m));
  return cert;
}

RationalizabilityResult iterated_rationalizability(const Game& g) {
  validate_game(g);
  std::vector<int> row_surv(g.rows()), col_surv(g.cols());
  for (int r = 0; r < g.rows(); ++r) row_surv[r] = r;
  for (int c = 0; c < g.cols(); ++c) col_surv[c] = c;

  RationalizabilityResult result;
  int player = 1;
  int quiet_scans = 0;
  while (quiet_scans < 2) {
    auto& surv = (player == 1) ? row_surv : col_surv;
    Game sub = restrict_game(g, row_surv, col_surv);
    const int count = static_cast<int>(surv.size());

    RationalizabilityRound round;
    round.player = player;
    round.row_survivors = row_surv;
    round.col_survivors = col_surv;
    std::vector<int> removed_local;
    if (count > 1) {
      for (int i = 0; i < count; ++i) {
        auto res = best_response_belief(sub, player, i);
        if (auto* cert = std::get_if<NbrCertificate>(&res)) {
          removed_local.push_back(i);
          round.removed.push_back(surv[i]);
          round.certificates.push_back(std::move(*cert));
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
      result.rounds.push_back(std::move(round));
    }
    player = 3 - player;
  }
  result.row_survivors = std::move(row_surv);
  result.col_survivors = std::move(col_surv);
  return result;
}

DominanceCertificate constructive_mixture_from_nbr(const Game& g, int player,
                                                   const NbrCertificate& cert) {
  const Game view = (player == 1) ? g : transpose(g);
  const int n = view.rows();
  const int m = view.cols();
  const int i = cert.action;
  const Polytope simplex = Polytope::probability_simplex(m);

  // Working list of half-spaces with attached convex weight vectors over the
  // player's actions.
  struct Entry {
    Vec normal;   // membership: normal . q < 0
    Vec weights;  // convex weights over the n actions
  };
  std::vector<Entry> work;
  for (const auto& [j, h] : cert.covering) {
    Vec w(n, Rational(0));
    w[j] = 1;
    work.push_back({h.normal, std::move(w)});
  }
  if (work.empty()) {
    throw std::invalid_argument("constructive_mixture_from_nbr: empty covering");
  }
  {
    std::vector<OpenHalfSpace> hs;
    for (const auto& e : work) hs.push_back({e.normal, Rational(0)});
    check_covering(hs, simplex);
  }

  while (work.size() > 1) {
    Entry a = std::move(work[0]);
    Entry b = std::move(work[1]);
    work.erase(work.begin(), work.begin() + 2);

    // S' = simplex minus what the remaining half-spaces already cover.
    auto cs = simplex.as_linear_constraints();
    for (const auto& e : work) {
      cs.push_back({e.normal, Relation::GreaterEq, Rational(0)});
    }
    if (!lp_feasible_point(cs, m)) {
      // The rest covers the simplex by itself; both picked are redundant.
    } else {
      // GreaterEq complements become LessEq with flipped signs.
      std::vector<Polytope::Constraint> pcs;
      for (const auto& c : cs) {
        if (c.rel == Relation::GreaterEq) {
          Vec neg = scale(Rational(-1), c.normal);
          pcs.push_back({std::move(neg), -c.offset});
        } else if (c.rel == Relation::Equal) {
          pcs.push_back({c.normal, c.offset});
          Vec neg = scale(Rational(-1), c.normal);
          pcs.push_back({std::move(neg), -c.offset});
        } else {
          pcs.push_back({c.normal, c.offset});
        }
      }
      Polytope sprime = Polytope::make(std::move(pcs), m);

      RotationMerge rm =
          rotation_merge({a.normal, Rational(0)}, {b.normal, Rational(0)}, sprime);
      Vec merged_w =
          add(scale(rm.lambda, a.weights), scale(1 - rm.lambda, b.weights));
      work.insert(work.begin(), {rm.merged.normal, std::move(merged_w)});
    }

    // Loop invariant: the current union still covers the simplex.
    std::vector<OpenHalfSpace> hs;
    for (const auto& e : work) hs.push_back({e.normal, Rational(0)});
    if (hs.empty() || union_covers(hs, simplex)) {
      throw std::logic_error("constructive_mixture_from_nbr: covering invariant broken");
    }
  }

  const Entry& final_entry = work[0];
  if (!halfspace_covers({final_entry.normal, Rational(0)}, simplex)) {
    throw std::logic_error("constructive_mixture_from_nbr: final half-space fails");
  }

  MixedStrategy mixture;
  Rational wsum = 0;
  for (int j = 0; j < n; ++j) {
    if (final_entry.weights[j] < 0) {
      throw std::logic_error("constructive_mixture_from_nbr: negative weight");
    }
    if (final_entry.weights[j] > 0) {
      mixture.weights.push_back({j, final_entry.weights[j]});
      wsum += final_entry.weights[j];
    }
  }
  if (wsum != 1) {
    throw std::logic_error("constructive_mixture_from_nbr: weights must sum to 1");
  }

  if (!mixed_dominates(g, player, mixture, i)) {
    throw std::logic_error("constructive_mixture_from_nbr: mixture fails to dominate");
  }

  Vec vi = payoff_vector(view, 1, i);
  Vec u(m, Rational(0));
  for (const auto& [j, w] : mixture.weights) {
    Vec vj = payoff_vector(view, 1, j);
    for (int k = 0; k < m; ++k) u[k] += w * vj[k];
  }
  Rational margin;
  bool first = true;
  for (int k = 0; k < m; ++k) {
    Rational gap = u[k] - vi[k];
    if (first || gap < margin) {
      margin = gap;
      first = false;
    }
  }
  return {i, std::move(mixture), std::move(margin)};
}

EquivalenceReport equivalence_report(const Game& g) {
  EquivalenceReport report;
  report.elimination = iesds(g);
  report.rationalizability = iterated_rationalizability(g);
  report.survivors_equal =
      report.elimination.row_survivors == report.rationalizability.row_survivors &&
      report.elimination.col_survivors == report.rationalizability.col_survivors;
  if (!report.survivors_equal) {
    throw std::logic_error("equivalence_report: survivor sets differ");
  }

  for (const auto& round : report.rationalizability.rounds) {
    Game sub = restrict_game(g, round.row_survivors, round.col_survivors);
    for (std::size_t t = 0; t < round.removed.size(); ++t) {
      EliminatedActionReport entry;
      entry.player = round.player;
      entry.action = round.removed[t];
      entry.row_context = round.row_survivors;
      entry.col_context = round.col_survivors;
      entry.nbr = round.certificates[t];
      entry.dominance = constructive_mixture_from_nbr(sub, round.player, entry.nbr);
      report.eliminated.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace domino
