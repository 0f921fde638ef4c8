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

#ifndef DOMINO_RATIONALIZABILITY_HPP
#define DOMINO_RATIONALIZABILITY_HPP

#include <variant>
#include <vector>

#include "domino/dominance.hpp"
#include "domino/game.hpp"
#include "domino/geometry.hpp"

namespace domino {

/// A belief against which `action` is a (weak) best response; slack[j] is
/// the exact payoff gap over action j at that belief.
struct BestResponseWitness {
  int action = -1;
  Belief belief;
  std::vector<Rational> slack;
};

/// Never-best-response certificate: homogeneous half-spaces
/// {q : (v_i - v_j) . q < 0}, one per listed opponent-beating action j,
/// whose union covers the belief simplex.
struct NbrCertificate {
  int action = -1;
  std::vector<std::pair<int, OpenHalfSpace>> covering;
};

struct RationalizabilityRound {
  int player = 0;
  std::vector<int> row_survivors, col_survivors;  // at round start
  std::vector<int> removed;                       // original indices
  std::vector<NbrCertificate> certificates;       // indices local to the round's subgame
};

struct RationalizabilityResult {
  std::vector<int> row_survivors, col_survivors;
  std::vector<RationalizabilityRound> rounds;
};

/// Entry for one action eliminated by both processes, carrying both kinds of
/// certificate relative to the round's restricted game.
struct EliminatedActionReport {
  int player = 0;
  int action = -1;  // original index
  std::vector<int> row_context, col_context;  // survivors when eliminated
  NbrCertificate nbr;                         // local indices in the context game
  DominanceCertificate dominance;             // local indices in the context game
};

struct EquivalenceReport {
  EliminationTrace elimination;
  RationalizabilityResult rationalizability;
  std::vector<EliminatedActionReport> eliminated;
  bool survivors_equal = false;
};

/// LP feasibility of {q in the simplex : (v_i - v_j) . q >= 0 for all j}.
/// Feasible point -> witness; infeasible -> the NBR covering certificate.
std::variant<BestResponseWitness, NbrCertificate> best_response_belief(
    const Game& g, int player, int i);

/// Alternating rounds (row player first) removing every never-best-response
/// action of the scanned player until a full pass removes nothing.
RationalizabilityResult iterated_rationalizability(const Game& g);

/// Constructive direction of the dominance/rationalizability equivalence:
/// repeatedly rotation-merges pairs of covering half-spaces (discarding
/// redundant pairs) down to a single half-space whose weight vector is a
/// strictly dominating mixture.
DominanceCertificate constructive_mixture_from_nbr(const Game& g, int player,
                                                   const NbrCertificate& cert);

/// Runs both processes, checks survivor-set equality, and equips every
/// eliminated action with both certificates, each re-verified.
EquivalenceReport equivalence_report(const Game& g);

}  // namespace domino

#endif  // DOMINO_RATIONALIZABILITY_HPP
