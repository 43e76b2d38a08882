#include <doctest.h>

#include <json.hpp>

#include "finfish/validation.hpp"

using namespace finfish;

TEST_CASE("alignment map orientations") {
  StatKey one_node{1, 0, 0, 0, 1};
  CHECK(AlignmentMap{true}.fish_key(one_node) == StatKey{2, 1, 1, 1, 2});
  StatKey skew{3, 1, 1, 2, 2};
  CHECK(AlignmentMap{true}.fish_key(skew) == StatKey{4, 2, 3, 2, 3});
  CHECK(AlignmentMap{false}.fish_key(skew) == StatKey{4, 2, 2, 3, 3});
  CHECK(AlignmentMap{true}.name() == "A=nonRootEven");
  CHECK(AlignmentMap{false}.name() == "A=odd");
}

TEST_CASE("report json schema") {
  SuiteReport rep;
  rep.suite = "demo";
  rep.params = "k=1";
  rep.checked = 3;
  rep.seconds = 0.25;
  auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["suite"] == "demo");
  CHECK(j["params"] == "k=1");
  CHECK(j["pass"] == true);
  CHECK(j["checked"] == 3);
  CHECK(!j.contains("failure"));
  CHECK(j["seconds"] == 0.25);

  rep.pass = false;
  rep.failure = SuiteFailure{{4, 2}, "6", "7", "demo mismatch"};
  j = nlohmann::json::parse(rep.to_json());
  CHECK(j["pass"] == false);
  CHECK(j["failure"]["tuple"] == nlohmann::json::array({4, 2}));
  CHECK(j["failure"]["expected"] == "6");
  CHECK(j["failure"]["actual"] == "7");
  CHECK(j["failure"]["note"] == "demo mismatch");
}

TEST_CASE("formula suite") {
  SuiteReport rep = check_formulas(4);
  CHECK(rep.pass);
  CHECK(!rep.failure.has_value());
  // 4 size totals plus two checks per (lsize, rsize) pair with i + j <= 5
  CHECK(rep.checked == 4 + 2 * 10);
  CHECK(rep.suite == "formulas");
  CHECK(rep.params == "maxN=4");
}

TEST_CASE("series-vs-enumeration suite") {
  SuiteReport rep = check_series_vs_enum(5);
  CHECK(rep.pass);
  CHECK(rep.checked > 30);
}

TEST_CASE("oracle suite") {
  SuiteReport rep = check_oracle(4);
  CHECK(rep.pass);
  // round trips both ways, the set comparison, and the census lines
  CHECK(rep.checked > 40);
}

TEST_CASE("fin-core suite") {
  SuiteReport rep = check_fincore(6);
  CHECK(rep.pass);
}

TEST_CASE("conjecture suite") {
  SuiteReport rep = check_conjecture(6);
  CHECK(rep.pass);
  CHECK(rep.params.find("orientation=") != std::string::npos);
  CHECK(rep.params.find("orientation=none") == std::string::npos);
}

TEST_CASE("identity suite") {
  SuiteReport rep = check_identities(5);
  CHECK(rep.pass);
  if (!rep.pass) MESSAGE(rep.to_json());
  CHECK(rep.checked > 80);
}

TEST_CASE("area summary") {
  AreaSummary s = area_report(6);
  CHECK(s.report.pass);
  REQUIRE(s.rows.size() == 5);
  CHECK(s.rows[0].size == 2);
  CHECK(s.rows[0].fish == 1);
  CHECK(s.rows[0].mean_area == 1);
  CHECK(s.rows[0].slope == 0.0);
  CHECK(s.rows[1].fish == 2);
  CHECK(s.rows[1].mean_area == 2);
  CHECK(s.rows[1].slope > 1.0);
  CHECK(s.rows[4].size == 6);
  CHECK(s.rows[4].mean_per_size > s.rows[3].mean_per_size);
}
