#include <doctest.h>

#include <json.hpp>

#include "seqgroves/scenario.hpp"
#include "test_util.hpp"

using namespace seqgroves;
using test_util::q;
using test_util::vals;

namespace {

ScenarioConfig scenario(const char* mechanism, std::vector<std::string> types,
                        std::vector<std::string> profile, const char* output = "json") {
  ScenarioConfig config;
  config.players = static_cast<int>(types.size());
  config.mechanism = mechanism;
  config.types = std::move(types);
  config.profile = std::move(profile);
  config.output = output;
  return config;
}

}  // namespace

TEST_CASE("scenario JSON parses and validates") {
  const auto config = ScenarioConfig::from_json_text(
      R"({"n":3,"mechanism":"vickrey","types":["3","5","4"],"profile":"vickrey-opt"})");
  CHECK(config.players == 3);
  CHECK(config.profile == std::vector<std::string>{"vickrey-opt"});
  CHECK(config.output == "table");

  CHECK_THROWS_AS(ScenarioConfig::from_json_text("not json"), ParseError);
  CHECK_THROWS_AS(ScenarioConfig::from_json_text(R"({"n":3})"), ParseError);
  CHECK_THROWS_AS(simulate(scenario("vickrey", {"3", "5"}, {"truth", "truth", "truth"})),
                  ParseError);
  CHECK_THROWS_AS(simulate(scenario("vickrey", {"3", "-5"}, {"truth"})), ParseError);
  CHECK_THROWS_AS(simulate(scenario("vickrey", {"3", "oops"}, {"truth"})), ParseError);
}

TEST_CASE("simulation compares the profile against truth-telling") {
  SUBCASE("Vickrey-optimal play raises the welfare on (3,5,4)") {
    const auto rows = simulate(scenario("vickrey", {"3", "5", "4"}, {"vickrey-opt"}));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].profile_label == "vickrey-opt");
    CHECK(rows[0].announcements == vals({"3", "5", "0"}));
    CHECK(rows[0].social_welfare == q("2"));
    CHECK(rows[1].profile_label == "truth");
    CHECK(rows[1].social_welfare == q("1"));
  }
  SUBCASE("BC-optimal play raises the welfare on (3,5,4)") {
    const auto rows = simulate(scenario("bailey-cavallo", {"3", "5", "4"}, {"bc-opt"}));
    CHECK(rows[0].social_welfare == q("5"));
    CHECK(rows[1].social_welfare == q("13/3"));
  }
  SUBCASE("all-equal BC types pay nothing in aggregate") {
    const auto rows = simulate(scenario("bailey-cavallo", {"5", "5", "5"}, {"truth"}));
    CHECK(rows[0].social_welfare == q("5"));
    CHECK(rows[0].aggregate_tax == q("0"));
  }
  SUBCASE("constant profiles replay a bid vector verbatim") {
    const auto rows = simulate(
        scenario("vickrey", {"3", "5", "4"}, {"constant:3", "constant:5", "constant:0"}));
    CHECK(rows[0].announcements == vals({"3", "5", "0"}));
    CHECK(rows[0].social_welfare == q("2"));
    CHECK(rows[0].utilities == vals({"0", "2", "0"}));
  }
}

TEST_CASE("CSV rendering is fixed-format, one row per player plus a summary") {
  const auto config = scenario("vickrey", {"3", "5", "4"}, {"vickrey-opt"}, "csv");
  const std::string csv = render_rows(config, simulate(config), "csv");
  CHECK(csv ==
        "profile,player,announced,winner,tax,utility,sw\n"
        "vickrey-opt,1,3,2,0,0,2\n"
        "vickrey-opt,2,5,2,-3,2,2\n"
        "vickrey-opt,3,0,2,0,0,2\n"
        "vickrey-opt,all,,2,-3,2,2\n"
        "truth,1,3,2,0,0,1\n"
        "truth,2,5,2,-4,1,1\n"
        "truth,3,4,2,0,0,1\n"
        "truth,all,,2,-4,1,1\n");
}

TEST_CASE("JSON rendering round trips the rational strings") {
  const auto config = scenario("bailey-cavallo", {"3", "5", "4"}, {"bc-opt"});
  const auto doc = nlohmann::json::parse(render_rows(config, simulate(config), "json"));
  CHECK(doc.at("rows").size() == 2);
  CHECK(doc.at("rows").at(0).at("social_welfare") == "5");
  CHECK(doc.at("rows").at(0).at("announcements") ==
        nlohmann::json::array({"3", "5", "3"}));
  CHECK(doc.at("rows").at(1).at("social_welfare") == "13/3");
  CHECK(doc.at("scenario").at("mechanism") == "bailey-cavallo");
}

TEST_CASE("the table renderer mentions every player") {
  const auto config = scenario("vickrey", {"3", "5", "4"}, {"vickrey-opt"}, "table");
  const std::string table = render_rows(config, simulate(config), "table");
  CHECK(table.find("winner 2") != std::string::npos);
  CHECK(table.find("social welfare 2") != std::string::npos);
  CHECK_THROWS_AS(render_rows(config, simulate(config), "yaml"), ParseError);
}
