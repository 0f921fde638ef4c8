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

#include "domino/report.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "domino/dominance.hpp"
#include "domino/oracle.hpp"
#include "domino/rationalizability.hpp"

namespace domino {

namespace {

constexpr int kVerifyGridResolution = 12;

std::vector<std::string> names_of(const Game& g, int player,
                                  const std::vector<int>& indices) {
  std::vector<std::string> out;
  for (int i : indices) out.push_back(g.action_name(player, i));
  return out;
}

Json mixture_to_json(const Game& ctx, int player, const MixedStrategy& mix) {
  Json j = Json::object();
  for (const auto& [i, w] : mix.weights) {
    j[ctx.action_name(player, i)] = to_fraction_string(w);
  }
  return j;
}

Json certificate_to_json(const Game& ctx, int player,
                         const DominanceCertificate& cert) {
  Json j;
  j["dominated"] = ctx.action_name(player, cert.dominated);
  j["mixture"] = mixture_to_json(ctx, player, cert.mixture);
  j["margin"] = to_fraction_string(cert.margin);
  return j;
}

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_fraction_string(x));
  return j;
}

Json nbr_to_json(const Game& ctx, int player, const NbrCertificate& cert) {
  Json j;
  j["action"] = ctx.action_name(player, cert.action);
  Json cover = Json::array();
  for (const auto& [other, h] : cert.covering) {
    Json e;
    e["better"] = ctx.action_name(player, other);
    e["normal"] = vec_to_json(h.normal);
    e["offset"] = to_fraction_string(h.offset);
    cover.push_back(std::move(e));
  }
  j["covering"] = std::move(cover);
  return j;
}

Json elimination_trace_to_json(const Game& g, const EliminationTrace& trace) {
  Json j;
  Json rounds = Json::array();
  for (const auto& round : trace.rounds) {
    Game ctx = restrict_game(g, round.row_survivors, round.col_survivors);
    Json jr;
    jr["player"] = round.player;
    jr["row_survivors"] = names_of(g, 1, round.row_survivors);
    jr["col_survivors"] = names_of(g, 2, round.col_survivors);
    Json removed = Json::array();
    for (std::size_t t = 0; t < round.removed.size(); ++t) {
      // Certificates are stored with original indices; re-express them in
      // the round's restricted game for self-contained verification.
      const auto& surv =
          (round.player == 1) ? round.row_survivors : round.col_survivors;
      auto local = [&surv](int original) {
        auto it = std::find(surv.begin(), surv.end(), original);
        return static_cast<int>(it - surv.begin());
      };
      DominanceCertificate localized;
      localized.dominated = local(round.certificates[t].dominated);
      localized.margin = round.certificates[t].margin;
      for (const auto& [i, w] : round.certificates[t].mixture.weights) {
        localized.mixture.weights.push_back({local(i), w});
      }
      Json e;
      e["action"] = g.action_name(round.player, round.removed[t]);
      e["certificate"] = certificate_to_json(ctx, round.player, localized);
      removed.push_back(std::move(e));
    }
    jr["removed"] = std::move(removed);
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);
  j["row_survivors"] = names_of(g, 1, trace.row_survivors);
  j["col_survivors"] = names_of(g, 2, trace.col_survivors);
  return j;
}

Json report_shell(const std::string& command, const std::string& input_text) {
  Json j;
  j["command"] = command;
  j["input_digest"] = input_digest(input_text);
  j["status"] = "ok";
  return j;
}

std::vector<int> indices_by_name(const Game& g, int player,
                                 const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& name : names) {
    const auto& pool = (player == 1) ? g.row_actions : g.col_actions;
    auto it = std::find(pool.begin(), pool.end(), name);
    if (it == pool.end()) {
      throw std::invalid_argument("unknown action name in report: " + name);
    }
    out.push_back(static_cast<int>(it - pool.begin()));
  }
  return out;
}

int index_by_name(const Game& g, int player, const std::string& name) {
  return indices_by_name(g, player, {name})[0];
}

DominanceCertificate certificate_from_json(const Game& ctx, int player,
                                           const Json& j) {
  DominanceCertificate cert;
  cert.dominated = index_by_name(ctx, player, j.at("dominated").get<std::string>());
  cert.margin = parse_rational(j.at("margin").get<std::string>());
  for (const auto& [name, w] : j.at("mixture").items()) {
    cert.mixture.weights.push_back(
        {index_by_name(ctx, player, name), parse_rational(w.get<std::string>())});
  }
  return cert;
}

// Checks one dominance certificate (JSON form) against its context game.
bool verify_certificate_json(const Game& ctx, int player, const Json& j,
                             std::string* detail) {
  DominanceCertificate cert = certificate_from_json(ctx, player, j);
  if (!verify_dominance_exhaustive(ctx, player, cert, {kVerifyGridResolution})) {
    if (detail) {
      *detail = "dominance certificate failed for action " +
                ctx.action_name(player, cert.dominated);
    }
    return false;
  }
  return true;
}

bool verify_nbr_json(const Game& ctx, int player, const Json& j,
                     std::string* detail) {
  const int i = index_by_name(ctx, player, j.at("action").get<std::string>());
  const Game view = (player == 1) ? ctx : transpose(ctx);
  const int m = view.cols();
  std::vector<OpenHalfSpace> hs;
  for (const auto& e : j.at("covering")) {
    Vec normal;
    for (const auto& x : e.at("normal")) normal.push_back(parse_rational(x.get<std::string>()));
    hs.push_back({std::move(normal), parse_rational(e.at("offset").get<std::string>())});
  }
  if (union_covers(hs, Polytope::probability_simplex(m))) {
    if (detail) {
      *detail = "NBR covering fails for action " + ctx.action_name(player, i);
    }
    return false;
  }
  if (grid_check_nbr(ctx, player, i, {kVerifyGridResolution})) {
    if (detail) {
      *detail = "grid found a best-response belief for claimed NBR action " +
                ctx.action_name(player, i);
    }
    return false;
  }
  return true;
}

bool verify_rounds(const Game& g, const Json& rounds, std::string* detail) {
  for (const auto& jr : rounds) {
    const int player = jr.at("player").get<int>();
    auto rows = indices_by_name(g, 1, jr.at("row_survivors").get<std::vector<std::string>>());
    auto cols = indices_by_name(g, 2, jr.at("col_survivors").get<std::vector<std::string>>());
    Game ctx = restrict_game(g, rows, cols);
    for (const auto& e : jr.at("removed")) {
      if (e.contains("certificate") &&
          !verify_certificate_json(ctx, player, e.at("certificate"), detail)) {
        return false;
      }
      if (e.contains("nbr_certificate") &&
          !verify_nbr_json(ctx, player, e.at("nbr_certificate"), detail)) {
        return false;
      }
      if (e.contains("dominance_certificate") &&
          !verify_certificate_json(ctx, player, e.at("dominance_certificate"), detail)) {
        return false;
      }
      if (e.contains("reduced_certificate") &&
          !verify_certificate_json(ctx, player, e.at("reduced_certificate"), detail)) {
        return false;
      }
    }
  }
  return true;
}

Json equivalence_to_json(const Game& g, const EquivalenceReport& eq) {
  Json j;
  j["iesds"] = elimination_trace_to_json(g, eq.elimination);

  Json rat;
  Json rounds = Json::array();
  for (const auto& round : eq.rationalizability.rounds) {
    Json jr;
    jr["player"] = round.player;
    jr["row_survivors"] = names_of(g, 1, round.row_survivors);
    jr["col_survivors"] = names_of(g, 2, round.col_survivors);
    jr["removed"] = names_of(g, round.player, round.removed);
    rounds.push_back(std::move(jr));
  }
  rat["rounds"] = std::move(rounds);
  rat["row_survivors"] = names_of(g, 1, eq.rationalizability.row_survivors);
  rat["col_survivors"] = names_of(g, 2, eq.rationalizability.col_survivors);
  j["rationalizability"] = std::move(rat);
  j["equivalence"] = eq.survivors_equal;

  // Eliminated actions with both certificates, grouped by their context so
  // `verify` can rebuild each restricted game.
  Json eliminated = Json::array();
  for (const auto& entry : eq.eliminated) {
    Game ctx = restrict_game(g, entry.row_context, entry.col_context);
    Json je;
    je["player"] = entry.player;
    je["row_survivors"] = names_of(g, 1, entry.row_context);
    je["col_survivors"] = names_of(g, 2, entry.col_context);
    Json removed = Json::array();
    Json e;
    e["action"] = g.action_name(entry.player, entry.action);
    e["nbr_certificate"] = nbr_to_json(ctx, entry.player, entry.nbr);
    e["dominance_certificate"] = certificate_to_json(ctx, entry.player, entry.dominance);
    DominanceCertificate reduced = reduce_support(ctx, entry.player, entry.dominance);
    e["reduced_certificate"] = certificate_to_json(ctx, entry.player, reduced);
    removed.push_back(std::move(e));
    je["removed"] = std::move(removed);
    eliminated.push_back(std::move(je));
  }
  j["eliminated"] = std::move(eliminated);
  return j;
}

}  // namespace

std::string input_digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

Json analyze_report(const Game& g, const std::string& input_text) {
  Json j = report_shell("analyze", input_text);
  Json results;

  // Dominance overview of the original game.
  Json players = Json::array();
  for (int player : {1, 2}) {
    const int count = g.actions(player);
    Json pure = Json::array();
    Json mixed = Json::array();
    for (int i = 0; i < count; ++i) {
      bool pure_dom = false;
      for (int a = 0; a < count && !pure_dom; ++a) {
        if (a != i && pure_dominates(g, player, i, a)) pure_dom = true;
      }
      std::vector<int> allowed;
      for (int a = 0; a < count; ++a) {
        if (a != i) allowed.push_back(a);
      }
      bool mixed_dom =
          count > 1 && find_dominating_mixture(g, player, i, allowed).has_value();
      if (pure_dom) pure.push_back(g.action_name(player, i));
      if (mixed_dom) mixed.push_back(g.action_name(player, i));
    }
    Json jp;
    jp["player"] = player;
    jp["pure_dominated"] = std::move(pure);
    jp["mixed_dominated"] = std::move(mixed);
    players.push_back(std::move(jp));
  }
  results["dominance"] = std::move(players);

  EquivalenceReport eq = equivalence_report(g);
  Json eqj = equivalence_to_json(g, eq);
  for (auto& [key, value] : eqj.items()) results[key] = value;

  j["results"] = std::move(results);
  return j;
}

Json iesds_report(const Game& g, const std::string& input_text) {
  Json j = report_shell("iesds", input_text);
  j["results"] = elimination_trace_to_json(g, iesds(g));
  return j;
}

Json rationalize_report(const Game& g, const std::string& input_text) {
  Json j = report_shell("rationalize", input_text);
  Json results;

  // Per-action best-response analysis of the original game.
  Json actions = Json::array();
  for (int player : {1, 2}) {
    const int count = g.actions(player);
    for (int i = 0; i < count; ++i) {
      Json e;
      e["player"] = player;
      e["action"] = g.action_name(player, i);
      auto res = best_response_belief(g, player, i);
      if (auto* w = std::get_if<BestResponseWitness>(&res)) {
        e["best_response"] = true;
        e["witness_belief"] = vec_to_json(w->belief.probs);
      } else {
        e["best_response"] = false;
        e["nbr_certificate"] = nbr_to_json(g, player, std::get<NbrCertificate>(res));
      }
      actions.push_back(std::move(e));
    }
  }
  results["actions"] = std::move(actions);

  RationalizabilityResult rr = iterated_rationalizability(g);
  results["row_survivors"] = names_of(g, 1, rr.row_survivors);
  results["col_survivors"] = names_of(g, 2, rr.col_survivors);
  j["results"] = std::move(results);
  return j;
}

Json dominate_report(const Game& g, const std::string& input_text, int player,
                     const std::string& action_name, bool* dominated_out) {
  const int i = index_by_name(g, player, action_name);
  Json j = report_shell("dominate", input_text);
  Json results;
  results["player"] = player;
  results["action"] = action_name;

  std::vector<int> allowed;
  for (int a = 0; a < g.actions(player); ++a) {
    if (a != i) allowed.push_back(a);
  }
  std::optional<DominanceCertificate> cert;
  if (!allowed.empty()) cert = find_dominating_mixture(g, player, i, allowed);
  results["dominated"] = cert.has_value();
  if (cert) {
    results["certificate"] = certificate_to_json(g, player, *cert);
    DominanceCertificate reduced = reduce_support(g, player, *cert);
    results["reduced_certificate"] = certificate_to_json(g, player, reduced);
  }
  if (dominated_out) *dominated_out = cert.has_value();
  j["results"] = std::move(results);
  return j;
}

bool verify_report(const Json& report, const Game& g, std::string* detail) {
  const Json* results = report.contains("results") ? &report.at("results") : nullptr;
  if (!results) {
    if (detail) *detail = "report has no results";
    return false;
  }

  if (results->contains("iesds") &&
      !verify_rounds(g, results->at("iesds").at("rounds"), detail)) {
    return false;
  }
  if (results->contains("rounds") && !verify_rounds(g, results->at("rounds"), detail)) {
    return false;
  }
  if (results->contains("eliminated") &&
      !verify_rounds(g, results->at("eliminated"), detail)) {
    return false;
  }
  if (results->contains("actions")) {
    for (const auto& e : results->at("actions")) {
      if (e.contains("nbr_certificate") &&
          !verify_nbr_json(g, e.at("player").get<int>(), e.at("nbr_certificate"),
                           detail)) {
        return false;
      }
    }
  }
  if (results->contains("certificate")) {
    const int player = results->at("player").get<int>();
    if (!verify_certificate_json(g, player, results->at("certificate"), detail)) {
      return false;
    }
    if (results->contains("reduced_certificate") &&
        !verify_certificate_json(g, player, results->at("reduced_certificate"),
                                 detail)) {
      return false;
    }
  }
  return true;
}

std::string plot_data_csv(const Game& g, int player) {
  const Game view = (player == 1) ? g : transpose(g);
  if (view.cols() != 2) {
    throw std::invalid_argument("plot-data requires exactly two opponent actions");
  }
  // E_i(q) = v1 q + v2 (1-q) = (v1 - v2) q + v2.
  std::ostringstream os;
  os << "action,slope,intercept\n";
  for (int i = 0; i < view.rows(); ++i) {
    Vec v = payoff_vector(view, 1, i);
    os << view.row_actions[i] << "," << to_fraction_string(v[0] - v[1]) << ","
       << to_fraction_string(v[1]) << "\n";
  }
  return os.str();
}

}  // namespace domino
