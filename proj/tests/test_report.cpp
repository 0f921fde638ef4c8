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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domino/instances.hpp"
#include "domino/report.hpp"

using namespace domino;

TEST_CASE("input digests are stable and content-sensitive") {
  CHECK(input_digest("") == "cbf29ce484222325");
  CHECK(input_digest("abc") == input_digest("abc"));
  CHECK(input_digest("abc") != input_digest("abd"));
}

TEST_CASE("analyze report on the figure game") {
  Game fig = paper_example("fig1");
  std::string text = serialize_game(fig);
  Json j = analyze_report(fig, text);
  CHECK(j.at("command") == "analyze");
  CHECK(j.at("status") == "ok");
  CHECK(j.at("input_digest") == input_digest(text));

  const Json& res = j.at("results");
  CHECK(res.at("equivalence") == true);
  CHECK(res.at("iesds").at("row_survivors") ==
        Json::array({"U", "M"}));
  CHECK(res.at("iesds").at("col_survivors") == Json::array({"L", "R"}));
  CHECK(res.at("rationalizability").at("row_survivors") == Json::array({"U", "M"}));
  CHECK(res.at("dominance")[0].at("mixed_dominated") == Json::array({"D"}));
  CHECK(res.at("dominance")[0].at("pure_dominated") == Json::array());
  REQUIRE(res.at("eliminated").size() == 1);
  const Json& entry = res.at("eliminated")[0].at("removed")[0];
  CHECK(entry.at("action") == "D");
  CHECK(entry.contains("nbr_certificate"));
  CHECK(entry.contains("dominance_certificate"));
  CHECK(entry.contains("reduced_certificate"));
  CHECK(entry.at("reduced_certificate").at("mixture").size() <= 2);

  std::string detail;
  CHECK(verify_report(j, fig, &detail));
  CHECK(detail.empty());
}

TEST_CASE("reports are deterministic bytes") {
  Game fig = paper_example("fig1");
  std::string text = serialize_game(fig);
  CHECK(analyze_report(fig, text).dump(2) == analyze_report(fig, text).dump(2));
  CHECK(iesds_report(fig, text).dump(2) == iesds_report(fig, text).dump(2));
}

TEST_CASE("iesds report round-trips through verify") {
  Game fig = paper_example("fig1");
  std::string text = serialize_game(fig);
  Json j = iesds_report(fig, text);
  const Json& res = j.at("results");
  REQUIRE(res.at("rounds").size() == 1);
  const Json& cert = res.at("rounds")[0].at("removed")[0].at("certificate");
  CHECK(cert.at("dominated") == "D");
  CHECK(cert.at("margin") == "1/3");
  CHECK(cert.at("mixture").at("U") == "1/3");
  CHECK(cert.at("mixture").at("M") == "2/3");
  std::string detail;
  CHECK(verify_report(j, fig, &detail));
}

TEST_CASE("verify rejects tampered reports") {
  Game fig = paper_example("fig1");
  std::string text = serialize_game(fig);
  Json j = iesds_report(fig, text);
  j["results"]["rounds"][0]["removed"][0]["certificate"]["mixture"]["U"] = "9/10";
  j["results"]["rounds"][0]["removed"][0]["certificate"]["mixture"]["M"] = "1/10";
  std::string detail;
  CHECK_FALSE(verify_report(j, fig, &detail));
  CHECK(!detail.empty());
}

TEST_CASE("rationalize report lists verdicts per action") {
  Game five = paper_example("five-lines");
  std::string text = serialize_game(five);
  Json j = rationalize_report(five, text);
  const Json& actions = j.at("results").at("actions");
  int best = 0, never = 0;
  for (const auto& e : actions) {
    if (e.at("player") != 1) continue;
    if (e.at("best_response").get<bool>()) {
      ++best;
      CHECK(e.contains("witness_belief"));
    } else {
      ++never;
      CHECK(e.contains("nbr_certificate"));
    }
  }
  CHECK(best == 3);
  CHECK(never == 2);
  std::string detail;
  CHECK(verify_report(j, five, &detail));
}

TEST_CASE("dominate report carries a reduced certificate") {
  Game five = paper_example("five-lines");
  std::string text = serialize_game(five);
  bool dominated = false;
  Json j = dominate_report(five, text, 1, "a4", &dominated);
  CHECK(dominated);
  CHECK(j.at("results").at("dominated") == true);
  CHECK(j.at("results").at("reduced_certificate").at("mixture").size() <= 2);
  std::string detail;
  CHECK(verify_report(j, five, &detail));

  bool dom2 = true;
  Json j2 = dominate_report(five, text, 1, "a1", &dom2);
  CHECK_FALSE(dom2);
  CHECK(j2.at("results").at("dominated") == false);
  CHECK_FALSE(j2.at("results").contains("certificate"));

  CHECK_THROWS_AS(dominate_report(five, text, 1, "missing", nullptr),
                  std::invalid_argument);
}

TEST_CASE("plot data lists one exact line per action") {
  Game five = paper_example("five-lines");
  std::string csv = plot_data_csv(five, 1);
  CHECK(csv ==
        "action,slope,intercept\n"
        "a1,6/5,2/5\n"
        "a2,-13/10,13/10\n"
        "a3,1/2,4/5\n"
        "a4,-4/5,1/1\n"
        "a5,0/1,4/5\n");
  Game fig = paper_example("fig1");
  CHECK(plot_data_csv(fig, 1) ==
        "action,slope,intercept\n"
        "U,6/1,0/1\n"
        "M,-3/1,5/1\n"
        "D,0/1,3/1\n");
  CHECK_THROWS_AS(plot_data_csv(transpose(fig), 1), std::invalid_argument);
}
