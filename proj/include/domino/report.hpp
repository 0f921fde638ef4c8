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

#ifndef DOMINO_REPORT_HPP
#define DOMINO_REPORT_HPP

#include <json.hpp>

#include <string>

#include "domino/game.hpp"

namespace domino {

using Json = nlohmann::ordered_json;

/// FNV-1a 64-bit digest of the input bytes, as hex.
std::string input_digest(const std::string& text);

// Report builders. All rationals serialize as "p/q"; actions are referenced
// by name together with the survivor context needed to re-verify embedded
// certificates on load.
Json analyze_report(const Game& g, const std::string& input_text);
Json iesds_report(const Game& g, const std::string& input_text);
Json rationalize_report(const Game& g, const std::string& input_text);

/// Dominance decision report for one action. `dominated_out` reports whether
/// a certificate was found (drives the CLI exit code).
Json dominate_report(const Game& g, const std::string& input_text, int player,
                     const std::string& action_name, bool* dominated_out);

/// Re-verifies every certificate embedded in a report against the game,
/// using the exhaustive oracle. Returns true iff everything checks out.
bool verify_report(const Json& report, const Game& g, std::string* detail);

/// CSV of expected-payoff lines E_i(q) for two-column games: one row per
/// action with name, slope, intercept as "p/q" strings.
std::string plot_data_csv(const Game& g, int player);

}  // namespace domino

#endif  // DOMINO_REPORT_HPP
