#include <doctest.h>

#include "seqgroves/grid.hpp"
#include "seqgroves/mechanisms.hpp"
#include "test_util.hpp"

using namespace seqgroves;
using test_util::all_tuples;
using test_util::naive_bc;
using test_util::naive_pivotal;
using test_util::q;
using test_util::vals;

TEST_CASE("pivotal tax charges the winner the second-highest bid") {
  CHECK(pivotal_tax(vals({"3", "5", "4"})) == vals({"0", "-4", "0"}));
  CHECK(pivotal_tax(vals({"0", "0", "0"})) == vals({"0", "0", "0"}));
  CHECK(pivotal_tax(vals({"1", "5", "0", "3", "2"})) == vals({"0", "-3", "0", "0", "0"}));
  CHECK_THROWS_AS(pivotal_tax(vals({"1"})), std::invalid_argument);
}

TEST_CASE("BC rebate is the second-highest of the others over n") {
  const auto bids = vals({"3", "5", "4"});
  CHECK(bc_redistribution(bids, 1) == q("4/3"));
  CHECK(bc_redistribution(bids, 2) == q("1"));
  CHECK(bc_redistribution(bids, 3) == q("1"));
  CHECK_THROWS_WITH_AS(bc_redistribution(vals({"1", "2"}), 1), "BC requires n >= 3",
                       std::invalid_argument);
}

TEST_CASE("BC taxes match the extraction oracle and the aggregate formula") {
  SUBCASE("hand-summed example") {
    const auto bids = vals({"3", "5", "4"});
    const auto expected = vals({"4/3", "-3", "1"});
    CHECK(naive_bc(bids) == expected);
    CHECK(bc_tax(bids) == expected);
    Value sum;
    for (const Value& t : bc_tax(bids)) sum += t;
    CHECK(sum == q("-2/3"));
    CHECK(sum == -(q("2") / q("3")) * (kth_highest(bids, 2) - kth_highest(bids, 3)));
  }
  SUBCASE("all-equal bids pay nothing in aggregate") {
    // Lowest index wins the three-way tie, so seat 1 carries the pivotal tax.
    const auto bids = vals({"5", "5", "5"});
    CHECK(bc_tax(bids) == naive_bc(bids));
    CHECK(bc_tax(bids) == vals({"-10/3", "5/3", "5/3"}));
    Value sum;
    for (const Value& t : bc_tax(bids)) sum += t;
    CHECK(sum == q("0"));
  }
  SUBCASE("five players, independently summed") {
    const auto bids = vals({"1", "5", "0", "3", "2"});
    Value sum;
    for (const Value& t : naive_bc(bids)) sum += t;
    CHECK(sum == q("-2/5"));
    Value impl_sum;
    for (const Value& t : bc_tax(bids)) impl_sum += t;
    CHECK(impl_sum == sum);
  }
}

TEST_CASE("pivotal taxes are zero away from the winner on the whole grid") {
  const auto grid = vals({"0", "1", "2"});
  for (const auto& bids : all_tuples(grid, 3)) {
    const auto taxes = pivotal_tax(bids);
    const int w = argsmax(bids);
    CHECK(taxes[w - 1] == -kth_highest(bids, 2));
    for (int i = 1; i <= 3; ++i) {
      if (i != w) CHECK(taxes[i - 1] == q("0"));
    }
    CHECK(taxes == naive_pivotal(bids));
  }
}

TEST_CASE("aggregate BC identities hold on the whole grid") {
  const auto grid = vals({"0", "1", "2", "3", "4"});
  const Value n{3};
  for (const auto& bids : all_tuples(grid, 3)) {
    const Value second = kth_highest(bids, 2);
    const Value third = kth_highest(bids, 3);
    Value rebates;
    for (int i = 1; i <= 3; ++i) rebates += bc_redistribution(bids, i);
    CHECK(rebates == (n - q("2")) / n * second + q("2") / n * third);
    Value total;
    for (const Value& t : bc_tax(bids)) total += t;
    CHECK(total == -(q("2") / n) * (second - third));
    if (second == third) CHECK(total == q("0"));
  }
}

TEST_CASE("the rebate never depends on the player's own bid") {
  const auto grid = vals({"0", "1", "2"});
  for (const auto& bids : all_tuples(grid, 3)) {
    for (int i = 1; i <= 3; ++i) {
      std::vector<Value> altered = bids;
      for (const Value& own : grid) {
        altered[i - 1] = own;
        CHECK(bc_redistribution(altered, i) == bc_redistribution(bids, i));
      }
    }
  }
}

TEST_CASE("running a mechanism composes winner, taxes and utilities") {
  SUBCASE("truthful Vickrey") {
    const auto out = run_mechanism(Mechanism::vickrey(3), AnnouncementVector{vals({"3", "5", "4"})},
                                   TypeVector{vals({"3", "5", "4"})});
    CHECK(out.winner == 2);
    CHECK(out.utilities == vals({"0", "1", "0"}));
    CHECK(out.social_welfare == q("1"));
  }
  SUBCASE("BC with shaded last bid") {
    const auto out = run_mechanism(Mechanism::bailey_cavallo(3),
                                   AnnouncementVector{vals({"3", "5", "3"})},
                                   TypeVector{vals({"3", "5", "4"})});
    CHECK(out.winner == 2);
    CHECK(out.taxes == vals({"1", "-2", "1"}));
    CHECK(out.utilities == vals({"1", "3", "1"}));
    CHECK(out.social_welfare == q("5"));
  }
  SUBCASE("Vickrey with zeroed last bid") {
    const auto out = run_mechanism(Mechanism::vickrey(3), AnnouncementVector{vals({"3", "5", "0"})},
                                   TypeVector{vals({"3", "5", "4"})});
    CHECK(out.winner == 2);
    CHECK(out.social_welfare == q("2"));
  }
  SUBCASE("length mismatch is rejected") {
    CHECK_THROWS_AS(run_mechanism(Mechanism::vickrey(3), AnnouncementVector{vals({"1", "2"})},
                                  TypeVector{vals({"1", "2", "3"})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_mechanism(Mechanism::vickrey(2), AnnouncementVector{vals({"1", "2", "3"})},
                                  TypeVector{vals({"1", "2", "3"})}),
                    std::invalid_argument);
  }
}

TEST_CASE("selectors build the right mechanisms") {
  CHECK(Mechanism::from_selector("vickrey", 2).kind() == MechanismKind::vickrey);
  CHECK(Mechanism::from_selector("bailey-cavallo", 3).kind() == MechanismKind::bailey_cavallo);
  CHECK(Mechanism::from_selector("groves:zero", 2).kind() == MechanismKind::groves);
  CHECK_THROWS_AS(Mechanism::from_selector("bailey-cavallo", 2), std::invalid_argument);
  CHECK_THROWS_AS(Mechanism::from_selector("groves:bc", 2), std::invalid_argument);
  CHECK_THROWS_AS(Mechanism::from_selector("english", 3), ParseError);
  CHECK_THROWS_AS(Mechanism::from_selector("groves:unknown", 3), ParseError);

  // groves:zero is the pivotal mechanism and groves:bc is Bailey-Cavallo.
  const auto bids = vals({"1", "5", "0", "3", "2"});
  CHECK(Mechanism::from_selector("groves:zero", 5).taxes(bids) == pivotal_tax(bids));
  CHECK(Mechanism::from_selector("groves:bc", 5).taxes(bids) == bc_tax(bids));
}

TEST_CASE("feasibility and incentive compatibility are independent") {
  const auto grid = vals({"0", "1", "2", "3"});

  SUBCASE("vickrey and BC are feasible and incentive compatible") {
    for (const auto* selector : {"vickrey", "bailey-cavallo"}) {
      const Mechanism mech = Mechanism::from_selector(selector, 3);
      for (const auto& bids : all_tuples(vals({"0", "1", "2"}), 3)) {
        CHECK(check_feasible(mech, AnnouncementVector{bids}));
      }
      CHECK_FALSE(check_incentive_compatible(mech, grid, 3).has_value());
    }
  }

  SUBCASE("a positive redistribution stays IC but breaks feasibility") {
    const Mechanism top = Mechanism::from_selector("groves:top", 3);
    CHECK_FALSE(check_incentive_compatible(top, vals({"0", "1", "2"}), 3).has_value());
    CHECK_FALSE(check_feasible(top, AnnouncementVector{vals({"1", "1", "1"})}));
  }

  SUBCASE("negative redistribution keeps both properties") {
    const Mechanism neg = Mechanism::from_selector("groves:neg-top", 3);
    CHECK_FALSE(check_incentive_compatible(neg, vals({"0", "1", "2"}), 3).has_value());
    for (const auto& bids : all_tuples(vals({"0", "1", "2"}), 3)) {
      CHECK(check_feasible(neg, AnnouncementVector{bids}));
    }
  }

  SUBCASE("empty grid is vacuously IC") {
    CHECK_FALSE(
        check_incentive_compatible(Mechanism::vickrey(3), std::vector<Value>{}, 3).has_value());
  }
}

TEST_CASE("IC sweeps are identical for any worker count") {
  const auto grid = vals({"0", "1", "2", "3"});
  for (const auto* selector : {"vickrey", "bailey-cavallo", "groves:top"}) {
    const Mechanism mech = Mechanism::from_selector(selector, 3);
    CHECK(check_incentive_compatible(mech, grid, 3, 1).has_value() ==
          check_incentive_compatible(mech, grid, 3, 4).has_value());
  }
}
