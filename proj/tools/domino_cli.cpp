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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "domino/game.hpp"
#include "domino/geometry.hpp"
#include "domino/instances.hpp"
#include "domino/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoFinding = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact dominance and rationalizability toolkit for finite two-player games"};
  app.require_subcommand(1);

  std::string game_path, report_path, cover_path;
  int player = 1;
  std::string action_name, fixture_name;
  int gen_n = 0, gen_m = 0;
  std::uint64_t seed = 0;
  long range_lo = -9, range_hi = 9;

  auto* analyze = app.add_subcommand("analyze", "Full dominance/rationalizability report");
  analyze->add_option("game", game_path)->required();

  auto* iesds_cmd = app.add_subcommand("iesds", "Iterated elimination trace");
  iesds_cmd->add_option("game", game_path)->required();

  auto* rationalize = app.add_subcommand("rationalize", "Never-best-response analysis");
  rationalize->add_option("game", game_path)->required();

  auto* dominate = app.add_subcommand("dominate", "Dominance decision for one action");
  dominate->add_option("game", game_path)->required();
  dominate->add_option("--player", player)->check(CLI::Range(1, 2))->required();
  dominate->add_option("--action", action_name)->required();

  auto* subcover = app.add_subcommand("subcover", "Minimal half-space subcover");
  subcover->add_option("cover", cover_path)->required();

  auto* generate = app.add_subcommand("generate", "Emit a game in the JSON format");
  auto* tight_opt = generate->add_option("--tight", "tight instance: N M")->expected(2);
  auto* random_opt = generate->add_option("--random", "random game: N M")->expected(2);
  generate->add_option("--seed", seed);
  auto* range_opt = generate->add_option("--range", "payoff range: LO HI")->expected(2);
  auto* fixture_opt = generate->add_option("--fixture", fixture_name);

  auto* verify = app.add_subcommand("verify", "Re-verify all certificates in a report");
  verify->add_option("report", report_path)->required();
  verify->add_option("game", game_path)->required();

  auto* plot = app.add_subcommand("plot-data", "Expected-payoff lines as CSV (m = 2)");
  plot->add_option("game", game_path)->required();
  plot->add_option("--player", player)->check(CLI::Range(1, 2));

  CLI11_PARSE(app, argc, argv);

  if (*analyze) {
    std::string text = read_file(game_path);
    std::cout << domino::analyze_report(domino::parse_game(text), text).dump(2) << "\n";
    return kExitOk;
  }
  if (*iesds_cmd) {
    std::string text = read_file(game_path);
    std::cout << domino::iesds_report(domino::parse_game(text), text).dump(2) << "\n";
    return kExitOk;
  }
  if (*rationalize) {
    std::string text = read_file(game_path);
    std::cout << domino::rationalize_report(domino::parse_game(text), text).dump(2)
              << "\n";
    return kExitOk;
  }
  if (*dominate) {
    std::string text = read_file(game_path);
    bool dominated = false;
    domino::Json rep = domino::dominate_report(domino::parse_game(text), text, player,
                                               action_name, &dominated);
    std::cout << rep.dump(2) << "\n";
    return dominated ? kExitOk : kExitNoFinding;
  }
  if (*subcover) {
    std::string text = read_file(cover_path);
    domino::Json j = domino::Json::parse(text);
    const int dim = j.at("dim").get<int>();
    auto parse_row = [](const domino::Json& row) {
      domino::Vec normal;
      for (std::size_t i = 0; i + 1 < row.size(); ++i) {
        normal.push_back(domino::parse_rational(row[i].is_string()
                                                    ? row[i].get<std::string>()
                                                    : row[i].dump()));
      }
      domino::Rational offset = domino::parse_rational(
          row.back().is_string() ? row.back().get<std::string>() : row.back().dump());
      return std::make_pair(std::move(normal), std::move(offset));
    };
    std::vector<domino::Polytope::Constraint> pcs;
    for (const auto& row : j.at("polytope")) {
      auto [normal, offset] = parse_row(row);
      pcs.push_back({std::move(normal), std::move(offset)});
    }
    domino::Polytope P = domino::Polytope::make(std::move(pcs), dim);
    std::vector<domino::OpenHalfSpace> hs;
    for (const auto& row : j.at("halfspaces")) {
      auto [normal, offset] = parse_row(row);
      hs.push_back({std::move(normal), std::move(offset)});
    }
    if (auto witness = domino::union_covers(hs, P)) {
      domino::Json out;
      out["command"] = "subcover";
      out["input_digest"] = domino::input_digest(text);
      out["status"] = "not_covered";
      out["witness"] = domino::Json::array();
      for (const auto& x : *witness) {
        out["witness"].push_back(domino::to_fraction_string(x));
      }
      std::cout << out.dump(2) << "\n";
      return kExitNoFinding;
    }
    auto kept = domino::minimal_subcover(hs, P);
    domino::Json out;
    out["command"] = "subcover";
    out["input_digest"] = domino::input_digest(text);
    out["status"] = "ok";
    out["kept"] = kept;
    out["size"] = kept.size();
    out["bound"] = domino::intrinsic_dimension(P) + 1;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (*generate) {
    domino::Game g;
    if (*tight_opt) {
      auto vals = tight_opt->results();
      g = domino::tight_instance(std::stoi(vals[0]), std::stoi(vals[1])).first;
    } else if (*random_opt) {
      auto vals = random_opt->results();
      long lo = range_lo, hi = range_hi;
      if (*range_opt) {
        auto r = range_opt->results();
        lo = std::stol(r[0]);
        hi = std::stol(r[1]);
      }
      g = domino::random_game(std::stoi(vals[0]), std::stoi(vals[1]), seed, lo, hi);
    } else if (*fixture_opt) {
      g = domino::paper_example(fixture_name);
    } else {
      std::cerr << "generate: one of --tight, --random, --fixture is required\n";
      return kExitInputError;
    }
    std::cout << domino::serialize_game(g);
    return kExitOk;
  }
  if (*verify) {
    std::string report_text = read_file(report_path);
    std::string game_text = read_file(game_path);
    domino::Json rep = domino::Json::parse(report_text);
    domino::Game g = domino::parse_game(game_text);
    std::string detail;
    if (domino::verify_report(rep, g, &detail)) {
      std::cout << "verify: pass\n";
      return kExitOk;
    }
    std::cout << "verify: fail (" << detail << ")\n";
    return kExitNoFinding;
  }
  if (*plot) {
    std::string text = read_file(game_path);
    std::cout << domino::plot_data_csv(domino::parse_game(text), player);
    return kExitOk;
  }
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
}
