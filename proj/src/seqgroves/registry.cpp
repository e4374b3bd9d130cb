/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <algorithm>
#include <stdexcept>

#include "seqgroves/oracle.hpp"

namespace seqgroves {

using nlohmann::ordered_json;

std::vector<std::string> suite_names() {
  return {"groves-ic",
          "feasibility",
          "lemma1",
          "lemma4",
          "corollary1",
          "vickrey-equality",
          "vickrey-socially-maximal",
          "sw-maximal-vickrey",
          "sw-maximal-bc",
          "bc-no-socially-optimal",
          "bc-not-utility-equal",
          "no-dominant",
          "last-player-dominant",
          "nash",
          "claim-thirdhighest",
          "all"};
}

std::vector<VerificationReport> run_suites(std::string_view name, const SuiteOptions& opt) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), std::string(name)) == names.end()) {
    throw ParseError("unknown suite: \"" + std::string(name) + "\"");
  }
  const bool all = name == "all";
  auto want = [&](std::string_view s) { return all || name == s; };
  auto require_bc = [&]() {
    if (opt.players < 3) throw std::invalid_argument("BC suites require n >= 3");
  };

  std::vector<VerificationReport> out;
  const Mechanism vickrey = Mechanism::vickrey(opt.players);

  if (want("groves-ic")) {
    out.push_back(check_groves_ic(vickrey, opt));
    require_bc();
    out.push_back(check_groves_ic(Mechanism::bailey_cavallo(opt.players), opt));
  }
  if (want("feasibility")) {
    out.push_back(check_feasibility(vickrey, opt));
    require_bc();
    out.push_back(check_feasibility(Mechanism::bailey_cavallo(opt.players), opt));
  }
  if (want("lemma1")) {
    out.push_back(check_clear_winner_loser_bounds(vickrey, opt));
    require_bc();
    out.push_back(check_clear_winner_loser_bounds(Mechanism::bailey_cavallo(opt.players), opt));
    out.push_back(check_clear_winner_loser_bounds(
        Mechanism::from_selector("groves:top", opt.players), opt));
  }
  if (want("lemma4")) {
    out.push_back(check_optimal_bid_shape_profile("truth", opt));
    out.push_back(check_optimal_bid_shape_profile("vickrey-opt", opt));
    if (opt.players >= 3) out.push_back(check_optimal_bid_shape_profile("bc-opt", opt));
    out.push_back(check_optimal_bid_shape_profile("adversarial", opt));
    out.push_back(check_optimal_bid_shape_fixtures(opt));
  }
  if (want("corollary1")) out.push_back(check_consistency_closure(opt));
  if (want("vickrey-equality")) out.push_back(check_vickrey_utility_equality(opt));
  if (want("vickrey-socially-maximal")) out.push_back(check_socially_maximal_vickrey(opt));
  if (want("sw-maximal-vickrey")) out.push_back(check_sw_maximal(vickrey, opt));
  if (want("sw-maximal-bc")) {
    require_bc();
    out.push_back(check_sw_maximal(Mechanism::bailey_cavallo(opt.players), opt));
  }
  if (want("bc-no-socially-optimal")) {
    require_bc();
    for (int i = 1; i <= opt.players; ++i) out.push_back(check_bc_no_socially_optimal(i, opt));
  }
  if (want("bc-not-utility-equal")) {
    require_bc();
    out.push_back(check_bc_not_utility_equal_search(opt));
    out.push_back(check_bc_not_utility_equal_scaled(opt));
    out.push_back(check_bc_not_utility_equal_canonical(opt));
  }
  if (want("no-dominant")) {
    for (int i = 1; i < opt.players; ++i) out.push_back(check_no_dominant(vickrey, i, opt));
    require_bc();
    for (int i = 1; i < opt.players; ++i) {
      out.push_back(check_no_dominant(Mechanism::bailey_cavallo(opt.players), i, opt));
    }
  }
  if (want("last-player-dominant")) {
    out.push_back(check_last_player_dominant(vickrey, opt));
    require_bc();
    out.push_back(check_last_player_dominant(Mechanism::bailey_cavallo(opt.players), opt));
  }
  if (want("nash")) {
    out.push_back(check_nash_truth(vickrey, opt));
    require_bc();
    out.push_back(check_nash_truth(Mechanism::bailey_cavallo(opt.players), opt));
    out.push_back(check_nash_deviation_example());
    out.push_back(check_nash_restricted(vickrey, opt));
    out.push_back(check_nash_restricted(Mechanism::bailey_cavallo(opt.players), opt));
  }
  if (want("claim-thirdhighest")) {
    require_bc();
    out.push_back(check_claim_thirdhighest(opt));
  }
  return out;
}

namespace {

ordered_json value_strings(std::span<const Value> values) {
  ordered_json out = ordered_json::array();
  for (const Value& v : values) out.push_back(v.str());
  return out;
}

ordered_json scenario_json(const std::string& mechanism, std::span<const Value> types,
                           std::span<const Value> bids) {
  ordered_json scenario;
  scenario["n"] = types.size();
  scenario["mechanism"] = mechanism;
  scenario["types"] = value_strings(types);
  ordered_json profile = ordered_json::array();
  for (const Value& b : bids) profile.push_back("constant:" + b.str());
  scenario["profile"] = std::move(profile);
  scenario["output"] = "json";
  return scenario;
}

ordered_json evaluation_json(const std::string& label, const Mechanism& mechanism,
                             std::span<const Value> types, std::span<const Value> bids) {
  const Outcome out = mechanism.evaluate(bids, types);
  ordered_json e;
  e["label"] = label;
  e["announcements"] = value_strings(bids);
  e["winner"] = out.winner;
  e["utilities"] = value_strings(out.utilities);
  Value aggregate;
  for (const Value& t : out.taxes) aggregate += t;
  e["aggregate_tax"] = aggregate.str();
  e["social_welfare"] = out.social_welfare.str();
  e["scenario"] = scenario_json(mechanism.selector(), types, bids);
  return e;
}

}  // namespace

std::vector<std::string> counterexample_names() {
  return {"bc-not-dominant", "nash-deviation", "no-dominant", "bc-no-socially-optimal"};
}

ordered_json counterexample_report(std::string_view name, const std::optional<Value>& epsilon) {
  ordered_json out;
  out["name"] = std::string(name);

  if (name == "bc-not-dominant") {
    const Value eps = epsilon.value_or(Value{1});
    if (!(eps > Value{0} && eps < Value{10})) {
      throw std::invalid_argument("epsilon must lie strictly between 0 and the top type 10");
    }
    const auto instance =
        bc_utility_inequality_instance({Value{10}, Value{9}, Value{8}}, eps, 2);
    const Mechanism bc = Mechanism::bailey_cavallo(3);
    out["description"] =
        "two optimal strategies give player 2 different rebates in the BC auction, so optimal "
        "strategies are not payoff-equivalent there";
    out["theta"] = value_strings(instance.theta);
    out["epsilon"] = eps.str();
    out["evaluations"] = ordered_json::array(
        {evaluation_json("undercut-by-epsilon", bc, instance.theta, instance.bids_undercut),
         evaluation_json("match-previous-bid", bc, instance.theta, instance.bids_match)});
    out["differing"] = {{"rebate_undercut", instance.rebate_undercut.str()},
                        {"rebate_match", instance.rebate_match.str()}};
    return out;
  }

  if (name == "nash-deviation") {
    const Mechanism vickrey = Mechanism::vickrey(2);
    const TypeVector types{{Value{1}, Value{2}}};
    const StrategyProfile profile = StrategyProfile::uniform("vickrey-opt", 2);
    const AnnouncementVector before = apply_profile(profile, types);
    const AnnouncementVector after = apply_profile_with_bid(profile, types, 1, Value{3});
    out["description"] =
        "outside the optimal class, overbidding makes the reacting second player drop to zero "
        "and hands player 1 the item for free";
    out["theta"] = value_strings(types.values());
    out["evaluations"] = ordered_json::array(
        {evaluation_json("designated", vickrey, types.values(), before.values()),
         evaluation_json("deviation-bid-3", vickrey, types.values(), after.values())});
    out["differing"] = {
        {"utility_designated",
         vickrey.evaluate(before.values(), types.values()).utilities[0].str()},
        {"utility_deviation",
         vickrey.evaluate(after.values(), types.values()).utilities[0].str()}};
    return out;
  }

  if (name == "no-dominant") {
    const Mechanism vickrey = Mechanism::vickrey(3);
    const std::vector<Value> theta{Value{2}, Value{0}, Value{0}};
    auto rollout = [&](const Value& bid) {
      std::vector<Value> announced{bid};
      for (int j = 2; j <= 3; ++j) {
        announced.push_back(Strategy::adversarial(j).bid(announced, theta[j - 1]));
      }
      return announced;
    };
    const std::vector<Value> truthful = rollout(Value{2});
    const std::vector<Value> shaded = rollout(Value{1});
    out["description"] =
        "against adversarial followers, the truthful bid any optimal strategy must make earns "
        "less than a shaded bid, so no strategy of player 1 is dominant";
    out["theta"] = value_strings(theta);
    out["evaluations"] =
        ordered_json::array({evaluation_json("truthful-bid", vickrey, theta, truthful),
                             evaluation_json("shaded-bid-1", vickrey, theta, shaded)});
    out["differing"] = {
        {"utility_truthful", vickrey.evaluate(truthful, theta).utilities[0].str()},
        {"utility_shaded", vickrey.evaluate(shaded, theta).utilities[0].str()}};
    return out;
  }

  if (name == "bc-no-socially-optimal") {
    const Mechanism bc = Mechanism::bailey_cavallo(3);
    out["description"] =
        "no bid of the middle player is welfare-best against every completion: the truthful "
        "bid loses to matching a type in between, and any other bid loses once the next type "
        "repeats the player's own";
    out["theta"] = value_strings(std::vector<Value>{Value{4}, Value{2}});
    const std::vector<Value> case1_types{Value{4}, Value{2}, Value{3}};
    const std::vector<Value> case2_types{Value{4}, Value{2}, Value{2}};
    out["evaluations"] = ordered_json::array(
        {evaluation_json("case1-truthful-bid-2", bc, case1_types,
                         std::vector<Value>{Value{4}, Value{2}, Value{3}}),
         evaluation_json("case1-alternative-bid-3", bc, case1_types,
                         std::vector<Value>{Value{4}, Value{3}, Value{3}}),
         evaluation_json("case2-overbid-4", bc, case2_types,
                         std::vector<Value>{Value{4}, Value{4}, Value{2}}),
         evaluation_json("case2-alternative-bid-2", bc, case2_types,
                         std::vector<Value>{Value{4}, Value{2}, Value{2}})});
    out["differing"] = {
        {"case1_sw_truthful",
         bc.evaluate(std::vector<Value>{Value{4}, Value{2}, Value{3}}, case1_types)
             .social_welfare.str()},
        {"case1_sw_alternative",
         bc.evaluate(std::vector<Value>{Value{4}, Value{3}, Value{3}}, case1_types)
             .social_welfare.str()},
        {"case2_sw_overbid",
         bc.evaluate(std::vector<Value>{Value{4}, Value{4}, Value{2}}, case2_types)
             .social_welfare.str()},
        {"case2_sw_alternative",
         bc.evaluate(std::vector<Value>{Value{4}, Value{2}, Value{2}}, case2_types)
             .social_welfare.str()}};
    return out;
  }

  throw ParseError("unknown counterexample: \"" + std::string(name) + "\"");
}

}  // namespace seqgroves
