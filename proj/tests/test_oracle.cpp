#include <doctest.h>

#include <algorithm>

#include "seqgroves/oracle.hpp"
#include "test_util.hpp"

using namespace seqgroves;
using test_util::all_tuples;
using test_util::q;
using test_util::vals;

namespace {

SuiteOptions options(int players, const char* grid, int jobs = 1) {
  SuiteOptions opt;
  opt.players = players;
  opt.grid = Grid::parse(grid);
  opt.jobs = jobs;
  return opt;
}

// Test-side restatement of the allowed-bid cases, written independently of
// ConsistencyConstraint so the two can check each other.
bool allowed_by_cases(std::span<const Value> prefix, const Value& type, int player, int players,
                      const Value& bid) {
  Value top{-1};
  for (const Value& v : prefix) top = std::max(top, v);
  if (bid.negative()) return false;
  if (player < players) {
    if (type > top) return bid == type;
    return bid <= top;
  }
  if (type > top) return bid > top;
  if (type == top) return true;
  return bid <= top;
}

std::vector<std::vector<Value>> announcement_lists(const std::vector<AnnouncementVector>& list) {
  std::vector<std::vector<Value>> out;
  for (const auto& a : list) out.emplace_back(a.values().begin(), a.values().end());
  return out;
}

}  // namespace

TEST_CASE("grids parse, contain and render") {
  const Grid g = Grid::parse("0..4");
  CHECK(g.size() == 5);
  CHECK(g.contains(q("3")));
  CHECK_FALSE(g.contains(q("1/2")));
  CHECK(g.spec() == "0..4");
  const Grid half = Grid::parse("0..2:1/2");
  CHECK(half.size() == 5);
  CHECK(half.contains(q("3/2")));
  CHECK(half.spec() == "0..2:1/2");
  CHECK(half.step() == q("1/2"));
  CHECK_THROWS_AS(Grid::parse("4..0"), std::invalid_argument);
  CHECK_THROWS_AS(Grid::parse("0..4:-1"), std::invalid_argument);
  CHECK_THROWS_AS(Grid::parse("-1..4"), std::invalid_argument);
  CHECK_THROWS_AS(Grid::parse("oops"), ParseError);
  CHECK_THROWS_AS(Grid::from_points(vals({"2", "1"})), std::invalid_argument);
}

TEST_CASE("consistent announcements for two players") {
  const Grid g = Grid::parse("0..3");
  CHECK(announcement_lists(consistent_announcements(TypeVector{vals({"2", "1"})}, g)) ==
        std::vector<std::vector<Value>>{vals({"2", "0"}), vals({"2", "1"}), vals({"2", "2"})});
  CHECK(announcement_lists(consistent_announcements(TypeVector{vals({"1", "2"})}, g)) ==
        std::vector<std::vector<Value>>{vals({"1", "2"}), vals({"1", "3"})});
  CHECK(announcement_lists(consistent_announcements(TypeVector{vals({"2", "2"})}, g)) ==
        std::vector<std::vector<Value>>{vals({"2", "0"}), vals({"2", "1"}), vals({"2", "2"}),
                                        vals({"2", "3"})});
  CHECK_THROWS_AS(consistent_announcements(TypeVector{vals({"5", "1"})}, g),
                  std::invalid_argument);
}

TEST_CASE("enumeration equals filtering every grid vector through the case split") {
  const Grid g = Grid::parse("0..2");
  const auto points = vals({"0", "1", "2"});
  for (int n = 2; n <= 3; ++n) {
    for (const auto& theta : all_tuples(points, n)) {
      const TypeVector types{theta};
      const auto enumerated = announcement_lists(consistent_announcements(types, g));
      std::vector<std::vector<Value>> filtered;
      for (const auto& cand : all_tuples(points, n)) {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
          ok = allowed_by_cases(std::span<const Value>(cand).subspan(0, i - 1), theta[i - 1], i,
                                n, cand[i - 1]);
        }
        if (ok) filtered.push_back(cand);
      }
      CHECK(enumerated == filtered);
      for (const auto& member : enumerated) CHECK(is_consistent(types, member, g));
    }
  }
}

TEST_CASE("curated profiles stay inside the consistent set") {
  const Grid g = Grid::parse("0..4");
  const auto points = vals({"0", "1", "2", "3", "4"});
  for (const auto& theta : all_tuples(points, 3)) {
    const TypeVector types{theta};
    const auto members = consistent_announcements(types, g);
    for (const char* selector : {"truth", "vickrey-opt", "bc-opt", "adversarial"}) {
      const auto produced = apply_profile(StrategyProfile::uniform(selector, 3), types);
      CHECK(std::find(members.begin(), members.end(), produced) != members.end());
    }
  }
}

TEST_CASE("pointwise optimality of the named strategies") {
  const SuiteOptions opt = options(3, "0..3");
  CHECK(check_pointwise_optimal(Strategy::vickrey_optimal(2), Mechanism::vickrey(3), opt).passed);
  CHECK(check_pointwise_optimal(Strategy::truth(2), Mechanism::bailey_cavallo(3), opt).passed);

  // Decision-preserving strategies are optimal at every seat of any Groves
  // auction, including the "wrong" mechanism's designated strategy.
  for (int seat = 1; seat <= 3; ++seat) {
    for (const char* mech : {"vickrey", "bailey-cavallo", "groves:top"}) {
      const Mechanism m = Mechanism::from_selector(mech, 3);
      CHECK(check_pointwise_optimal(Strategy::vickrey_optimal(seat), m, opt).passed);
      CHECK(check_pointwise_optimal(Strategy::bc_optimal(seat, 3), m, opt).passed);
      CHECK(check_pointwise_optimal(Strategy::truth(seat), m, opt).passed);
      CHECK(check_pointwise_optimal(Strategy::adversarial(seat), m, opt).passed);
    }
  }

  const auto broken =
      check_pointwise_optimal(Strategy::constant(2, q("3")), Mechanism::vickrey(3), opt);
  CHECK_FALSE(broken.passed);
  REQUIRE(broken.witness.has_value());
  CHECK(broken.witness->theta == vals({"0", "0", "1"}));
  // Re-running the witness instance reproduces the violation.
  const Mechanism vick = Mechanism::vickrey(3);
  const Value u_strategy =
      vick.evaluate(vals({"0", "3", "1"}), broken.witness->theta).utilities[1];
  const Value u_dev = vick.evaluate(vals({"0", "0", "1"}), broken.witness->theta).utilities[1];
  CHECK(u_strategy == q("-1"));
  CHECK(u_dev == q("0"));
  CHECK(u_dev > u_strategy);
}

TEST_CASE("bid shapes of the named strategies pass and the fixtures are flagged") {
  const SuiteOptions opt = options(3, "0..4");
  for (const char* selector : {"truth", "vickrey-opt", "bc-opt", "adversarial"}) {
    CHECK(check_optimal_bid_shape_profile(selector, opt).passed);
  }
  CHECK(check_optimal_bid_shape(Strategy::bc_optimal(3, 3), opt).passed);
  CHECK(check_optimal_bid_shape_fixtures(opt).passed);

  // Each fixture violates exactly its targeted case.
  const auto r1 = check_optimal_bid_shape(broken_bid_shape_fixture(1, 1, 3), opt);
  CHECK_FALSE(r1.passed);
  CHECK(r1.witness->note == "violates: winner-before-last bids the true type");
  const auto r2 = check_optimal_bid_shape(broken_bid_shape_fixture(2, 3, 3), opt);
  CHECK_FALSE(r2.passed);
  CHECK(r2.witness->note == "violates: winning last player bids above the prefix max");
  const auto r3 = check_optimal_bid_shape(broken_bid_shape_fixture(3, 2, 3), opt);
  CHECK_FALSE(r3.passed);
  CHECK(r3.witness->note == "violates: loser bids at most the prefix max");
  const auto r4 = check_optimal_bid_shape(broken_bid_shape_fixture(4, 3, 3), opt);
  CHECK_FALSE(r4.passed);
  CHECK(r4.witness->note == "violates: loser bids at most the prefix max");
  CHECK_THROWS_AS(broken_bid_shape_fixture(5, 1, 3), std::invalid_argument);
}

TEST_CASE("no player before the last has a dominant strategy") {
  const SuiteOptions opt3 = options(3, "0..3");
  const auto vickrey = check_no_dominant(Mechanism::vickrey(3), 1, opt3);
  CHECK(vickrey.passed);
  REQUIRE(vickrey.witness.has_value());
  auto value_of = [](const Witness& w, const char* name) {
    for (const auto& [key, v] : w.values) {
      if (key == name) return v;
    }
    throw std::runtime_error(std::string("missing witness value ") + name);
  };
  CHECK(value_of(*vickrey.witness, "truthful_bid_utility") == q("1"));
  CHECK(value_of(*vickrey.witness, "shaded_bid_utility") == q("2"));

  const auto bc = check_no_dominant(Mechanism::bailey_cavallo(3), 1, opt3);
  CHECK(bc.passed);
  CHECK(value_of(*bc.witness, "shaded_bid_utility") >
        value_of(*bc.witness, "truthful_bid_utility"));
  CHECK(check_no_dominant(Mechanism::bailey_cavallo(3), 2, opt3).passed);

  const SuiteOptions opt2 = options(2, "0..3");
  const auto two = check_no_dominant(Mechanism::vickrey(2), 1, opt2);
  CHECK(two.passed);
  CHECK(value_of(*two.witness, "truthful_bid_utility") == q("1"));
  CHECK(value_of(*two.witness, "shaded_bid_utility") == q("2"));

  CHECK_THROWS_AS(check_no_dominant(Mechanism::vickrey(3), 3, opt3), std::invalid_argument);
  CHECK_THROWS_AS(check_no_dominant(Mechanism::vickrey(2), 1, options(2, "0..1")),
                  std::invalid_argument);
}

TEST_CASE("the shaped last-player strategy is dominant") {
  CHECK(check_last_player_dominant(Mechanism::vickrey(3), options(3, "0..3")).passed);
  CHECK(check_last_player_dominant(Mechanism::bailey_cavallo(3), options(3, "0..3")).passed);
  SuiteOptions sparse = options(2, "0..1");
  sparse.grid = Grid::from_points(vals({"0", "5"}), q("5"));
  CHECK(check_last_player_dominant(Mechanism::vickrey(2), sparse).passed);
}

TEST_CASE("Vickrey utilities are equal across matched optimal pairs") {
  CHECK(check_vickrey_utility_equality(options(3, "0..4")).passed);
  CHECK(check_vickrey_utility_equality(options(2, "0..1")).passed);

  // Tied last player: zero utility under every consistent announcement.
  const Grid g = Grid::parse("0..4");
  const TypeVector types{vals({"2", "1", "2"})};
  const Mechanism vick = Mechanism::vickrey(3);
  for (const auto& ann : consistent_announcements(types, g)) {
    CHECK(vick.evaluate(ann.values(), types.values()).utilities[2] == q("0"));
  }
}

TEST_CASE("BC utilities differ across matched optimal pairs") {
  const auto search = check_bc_not_utility_equal_search(options(3, "0..4"));
  CHECK(search.passed);
  REQUIRE(search.witness.has_value());

  const auto scaled = check_bc_not_utility_equal_scaled(options(3, "0..4"));
  CHECK(scaled.passed);
  auto value_of = [](const Witness& w, const char* name) {
    for (const auto& [key, v] : w.values) {
      if (key == name) return v;
    }
    throw std::runtime_error(std::string("missing witness value ") + name);
  };
  CHECK(value_of(*scaled.witness, "rebate_undercut") == q("2/3"));
  CHECK(value_of(*scaled.witness, "rebate_match") == q("1"));

  const auto canonical = check_bc_not_utility_equal_canonical(options(3, "0..4"));
  CHECK(canonical.passed);
  CHECK(value_of(*canonical.witness, "rebate_undercut") == q("8/3"));
  CHECK(value_of(*canonical.witness, "rebate_match") == q("3"));

  // Other epsilons keep the strict gap: (10 - 2e)/3 vs (10 - e)/3.
  SuiteOptions halved = options(3, "0..4");
  halved.epsilon = q("1/2");
  const auto half = check_bc_not_utility_equal_canonical(halved);
  CHECK(half.passed);
  CHECK(value_of(*half.witness, "rebate_undercut") == q("3"));
  CHECK(value_of(*half.witness, "rebate_match") == q("19/6"));
  SuiteOptions huge = options(3, "0..4");
  huge.epsilon = q("10");
  CHECK_THROWS_AS(check_bc_not_utility_equal_canonical(huge), std::invalid_argument);

  // The instance helper exposes the two announcement vectors directly.
  const auto instance = bc_utility_inequality_instance(vals({"10", "9", "8"}), q("1"), 2);
  CHECK(instance.bids_undercut == vals({"10", "9", "8"}));
  CHECK(instance.bids_match == vals({"10", "10", "9"}));
  CHECK_THROWS_AS(bc_utility_inequality_instance(vals({"10", "9"}), q("1"), 2),
                  std::invalid_argument);

  // Degenerate all-zero types: every matched pair agrees for every player.
  const Grid g = Grid::parse("0..4");
  const TypeVector zero{vals({"0", "0", "0"})};
  const Mechanism bc = Mechanism::bailey_cavallo(3);
  const auto members = consistent_announcements(zero, g);
  for (int i = 1; i <= 3; ++i) {
    for (const auto& a : members) {
      for (const auto& b : members) {
        const bool same_prefix = std::equal(a.values().begin(), a.values().begin() + (i - 1),
                                            b.values().begin());
        if (!same_prefix || a.at(i) == b.at(i)) continue;
        CHECK(bc.evaluate(a.values(), zero.values()).utilities[i - 1] ==
              bc.evaluate(b.values(), zero.values()).utilities[i - 1]);
      }
    }
  }
}

TEST_CASE("designated profiles maximize welfare over all optimal play") {
  CHECK(check_sw_maximal(Mechanism::vickrey(3), options(3, "0..4")).passed);
  CHECK(check_sw_maximal(Mechanism::bailey_cavallo(3), options(3, "0..4")).passed);
  CHECK(check_sw_maximal(Mechanism::bailey_cavallo(4), options(4, "0..3")).passed);
  CHECK(check_sw_maximal(Mechanism::vickrey(2), options(2, "0..2")).passed);
  CHECK_THROWS_AS(check_sw_maximal(Mechanism::from_selector("groves:top", 3), options(3, "0..2")),
                  std::invalid_argument);
}

TEST_CASE("the Vickrey-optimal strategy is socially maximal") {
  CHECK(check_socially_maximal_vickrey(options(3, "0..4")).passed);
  CHECK(check_socially_maximal_vickrey(options(2, "0..1")).passed);

  // Direct spec instance: theta=(3,5,4), the last player's zero bid leaves
  // player 2 with utility 2, no allowed bid gives more.
  const Mechanism vick = Mechanism::vickrey(3);
  const std::vector<Value> theta = vals({"3", "5", "4"});
  CHECK(vick.evaluate(vals({"3", "5", "0"}), theta).utilities[1] == q("2"));
  for (const char* b : {"0", "1", "2", "3", "4", "5"}) {
    CHECK(vick.evaluate(vals({"3", "5", b}), theta).utilities[1] <= q("2"));
  }
}

TEST_CASE("the BC auction has no socially optimal middle strategy") {
  const SuiteOptions opt = options(3, "0..4");
  CHECK(check_bc_no_socially_optimal(1, opt).passed);  // none found
  CHECK(check_bc_no_socially_optimal(3, opt).passed);  // none found
  const auto middle = check_bc_no_socially_optimal(2, opt);
  CHECK(middle.passed);
  REQUIRE(middle.witness.has_value());
  auto value_of = [](const Witness& w, const char* name) {
    for (const auto& [key, v] : w.values) {
      if (key == name) return v;
    }
    throw std::runtime_error(std::string("missing witness value ") + name);
  };
  // Canonical family (4,2,.): the truthful bid loses to 3 under completion 3,
  // and any other bid loses to 2 under completion 2.
  CHECK(value_of(*middle.witness, "family_prefix_max") == q("4"));
  CHECK(value_of(*middle.witness, "family_type") == q("2"));
  CHECK(value_of(*middle.witness, "case1_completion") == q("3"));
  CHECK(value_of(*middle.witness, "case1_sw_truthful") == q("10/3"));
  CHECK(value_of(*middle.witness, "case1_sw_alt") == q("4"));
  CHECK(value_of(*middle.witness, "case2_sw_truthful") == q("4"));

  // Aggregate taxes behind the two cases, computed directly.
  const Mechanism bc = Mechanism::bailey_cavallo(3);
  Value case1_tax;
  for (const Value& t : bc.taxes(vals({"4", "2", "3"}))) case1_tax += t;
  CHECK(case1_tax == q("-2/3"));
  Value case2_tax;
  for (const Value& t : bc.taxes(vals({"4", "4", "2"}))) case2_tax += t;
  CHECK(case2_tax == q("-4/3"));
}

TEST_CASE("BC-optimal announcements dominate every consistent one entrywise") {
  CHECK(check_claim_thirdhighest(options(3, "0..4")).passed);
  CHECK(check_claim_thirdhighest(options(4, "0..3")).passed);
}

TEST_CASE("consistent play preserves prefixes and the allocation") {
  CHECK(check_consistency_closure(options(3, "0..4")).passed);
  CHECK(check_consistency_closure(options(2, "0..2")).passed);
}

TEST_CASE("Nash checks for the simultaneous reading") {
  CHECK(check_nash_truth(Mechanism::vickrey(3), options(3, "0..3")).passed);
  CHECK(check_nash_truth(Mechanism::bailey_cavallo(3), options(3, "0..3")).passed);

  const auto example = check_nash_deviation_example();
  CHECK(example.passed);
  REQUIRE(example.witness.has_value());
  CHECK(example.witness->theta == vals({"1", "2"}));
  CHECK(example.witness->announcements == vals({"3", "0"}));

  CHECK(check_nash_restricted(Mechanism::vickrey(3), options(3, "0..4")).passed);
  CHECK(check_nash_restricted(Mechanism::bailey_cavallo(3), options(3, "0..4")).passed);
}

TEST_CASE("suite registry matches names and rejects unknown ones") {
  const auto names = suite_names();
  CHECK(std::find(names.begin(), names.end(), "all") != names.end());
  CHECK_THROWS_AS(run_suites("bogus", options(3, "0..2")), ParseError);
  CHECK_THROWS_AS(run_suites("claim-thirdhighest", options(2, "0..2")), std::invalid_argument);
  const auto reports = run_suites("no-dominant", options(3, "0..3"));
  CHECK(reports.size() == 4);  // two mechanisms, players 1 and 2
  for (const auto& r : reports) CHECK(r.passed);
}

TEST_CASE("reports are byte-identical for any worker count") {
  for (const char* suite :
       {"vickrey-equality", "sw-maximal-bc", "corollary1", "bc-not-utility-equal"}) {
    const auto a = to_json(run_suites(suite, options(3, "0..4", 1))).dump(2);
    const auto b = to_json(run_suites(suite, options(3, "0..4", 4))).dump(2);
    CHECK(a == b);
  }
}

TEST_CASE("witness values replay through the mechanism") {
  // Every witness carries u1..un and sw of its (theta, announcements) pair.
  for (const char* suite : {"no-dominant", "bc-not-utility-equal", "sw-maximal-vickrey"}) {
    for (const auto& report : run_suites(suite, options(3, "0..4"))) {
      if (!report.witness || report.witness->announcements.empty()) continue;
      const Mechanism mech =
          Mechanism::from_selector(report.params.mechanism, report.params.players);
      const Outcome out =
          mech.evaluate(report.witness->announcements, report.witness->theta);
      for (const auto& [name, value] : report.witness->values) {
        if (name.size() == 2 && name[0] == 'u' && name[1] >= '1' && name[1] <= '9') {
          CHECK(out.utilities[static_cast<std::size_t>(name[1] - '1')] == value);
        }
        if (name == "sw") CHECK(out.social_welfare == value);
      }
    }
  }
}

TEST_CASE("counterexample reports carry re-runnable scenarios") {
  for (const auto& name : counterexample_names()) {
    const auto doc = counterexample_report(name, std::nullopt);
    CHECK(doc.at("name") == name);
    CHECK(doc.at("evaluations").size() >= 2);
    for (const auto& eval : doc.at("evaluations")) {
      CHECK(eval.contains("scenario"));
      CHECK(eval.at("scenario").at("mechanism").is_string());
    }
  }
  CHECK_THROWS_AS(counterexample_report("bogus", std::nullopt), ParseError);
  const auto nd = counterexample_report("no-dominant", std::nullopt);
  CHECK(nd.at("differing").at("utility_truthful") == "1");
  CHECK(nd.at("differing").at("utility_shaded") == "2");
  const auto bc = counterexample_report("bc-not-dominant", q("1"));
  CHECK(bc.at("differing").at("rebate_undercut") == "8/3");
  CHECK(bc.at("differing").at("rebate_match") == "3");
}
