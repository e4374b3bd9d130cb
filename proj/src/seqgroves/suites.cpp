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
#include <atomic>
#include <map>
#include <stdexcept>

#include "seqgroves/oracle.hpp"
#include "seqgroves/sweep.hpp"

namespace seqgroves {

namespace {

SuiteParams params_for(const SuiteOptions& opt, const std::string& mechanism = "",
                       const std::string& epsilon = "") {
  SuiteParams p;
  p.mechanism = mechanism;
  p.players = opt.players;
  p.grid = opt.grid.spec();
  p.epsilon = epsilon;
  return p;
}

/// Adds u1..un, aggregate_tax and sw of (announcements, theta) so that every
/// witness can be replayed through the simulator byte-for-byte.
void attach_outcome(Witness& w, const Mechanism& mechanism) {
  const Outcome out = mechanism.evaluate(w.announcements, w.theta);
  Value aggregate;
  for (const Value& t : out.taxes) aggregate += t;
  for (int i = 1; i <= static_cast<int>(w.theta.size()); ++i) {
    w.values.emplace_back("u" + std::to_string(i), out.utilities[i - 1]);
  }
  w.values.emplace_back("aggregate_tax", aggregate);
  w.values.emplace_back("sw", out.social_welfare);
}

Value aggregate_tax(std::span<const Value> taxes) {
  Value total;
  for (const Value& t : taxes) total += t;
  return total;
}

std::vector<AnnouncementVector> consistent_for(std::span<const Value> theta, const Grid& grid) {
  return consistent_announcements(TypeVector(std::vector<Value>(theta.begin(), theta.end())),
                                  grid);
}

StrategyProfile designated_profile(const Mechanism& mechanism) {
  switch (mechanism.kind()) {
    case MechanismKind::vickrey:
      return StrategyProfile::uniform("vickrey-opt", mechanism.players());
    case MechanismKind::bailey_cavallo:
      return StrategyProfile::uniform("bc-opt", mechanism.players());
    case MechanismKind::groves:
      break;
  }
  throw std::invalid_argument("no designated optimal profile for " + mechanism.selector());
}

}  // namespace

Value SuiteOptions::resolved_epsilon() const {
  if (!epsilon) return grid.step();
  if (*epsilon <= Value{0}) throw std::invalid_argument("epsilon must be positive");
  return *epsilon;
}

VerificationReport check_groves_ic(const Mechanism& mechanism, const SuiteOptions& opt) {
  VerificationReport report;
  report.suite = "groves-ic:" + mechanism.selector();
  report.params = params_for(opt, mechanism.selector());
  report.instances = checked_pow(opt.grid.size(), opt.players);
  report.note = "truth-telling is a best response against every grid deviation, exact";
  const auto violation =
      check_incentive_compatible(mechanism, opt.grid.points(), opt.players, opt.jobs);
  report.passed = !violation.has_value();
  if (violation) {
    Witness w;
    w.theta = violation->theta;
    w.announcements = violation->theta;
    w.announcements[violation->player - 1] = violation->deviation;
    w.values.emplace_back("player", Value(violation->player));
    w.values.emplace_back("deviation", violation->deviation);
    w.values.emplace_back("truthful_utility", violation->truthful_utility);
    w.values.emplace_back("deviating_utility", violation->deviating_utility);
    w.note = "profitable misreport (announcements = deviated bids)";
    attach_outcome(w, mechanism);
    report.witness = std::move(w);
  }
  return report;
}

VerificationReport check_feasibility(const Mechanism& mechanism, const SuiteOptions& opt) {
  const bool bc = mechanism.kind() == MechanismKind::bailey_cavallo;
  VerificationReport report;
  report.suite = "feasibility:" + mechanism.selector();
  report.params = params_for(opt, mechanism.selector());
  report.instances = checked_pow(opt.grid.size(), opt.players);
  report.note = bc ? "aggregate tax <= 0, and the BC aggregate identities hold exactly"
                   : "aggregate tax <= 0 on every grid bid vector";
  const int n = opt.players;
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    const std::vector<Value> bids = nth_tuple(opt.grid.points(), n, index);
    const std::vector<Value> taxes = mechanism.taxes(bids);
    const Value total = aggregate_tax(taxes);
    std::string broken;
    if (total > Value{0}) broken = "aggregate tax positive";
    if (bc && broken.empty()) {
      const Value second = kth_highest(bids, 2);
      const Value third = kth_highest(bids, 3);
      Value rebates;
      for (int i = 1; i <= n; ++i) rebates += bc_redistribution(bids, i);
      const Value nv{static_cast<long long>(n)};
      if (rebates != (nv - Value{2}) / nv * second + Value{2} / nv * third) {
        broken = "aggregate redistribution identity failed";
      } else if (total != -(Value{2} / nv) * (second - third)) {
        broken = "aggregate tax identity failed";
      }
    }
    if (broken.empty()) return std::nullopt;
    Witness w;
    w.theta = bids;
    w.announcements = bids;
    w.values.emplace_back("aggregate_tax_found", total);
    w.note = broken;
    attach_outcome(w, mechanism);
    return w;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);
  report.passed = !hit.has_value();
  if (hit) report.witness = std::move(hit->second);
  return report;
}

VerificationReport check_clear_winner_loser_bounds(const Mechanism& mechanism,
                                                   const SuiteOptions& opt) {
  VerificationReport report;
  report.suite = "lemma1:" + mechanism.selector();
  report.params = params_for(opt, mechanism.selector());
  report.instances = checked_pow(opt.grid.size(), opt.players);
  report.note =
      "clear winners strictly prefer the truthful bid to any losing bid; "
      "clear losers strictly prefer it to any winning bid";
  const int n = opt.players;
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    const std::vector<Value> theta = nth_tuple(opt.grid.points(), n, index);
    const std::vector<Value> taxes = mechanism.taxes(theta);
    std::vector<Value> bids = theta;
    for (int i = 1; i <= n; ++i) {
      const Value others_top = kth_highest_excluding(theta, i, 1);
      const bool clear_winner = theta[i - 1] > others_top;
      const bool clear_loser = others_top > theta[i - 1];
      if (!clear_winner && !clear_loser) continue;
      for (const Value& dev : opt.grid.points()) {
        bids[i - 1] = dev;
        std::string broken;
        if (clear_winner && argsmax(bids) != i) {
          const std::vector<Value> dev_taxes = mechanism.taxes(bids);
          if (!(theta[i - 1] + taxes[i - 1] > dev_taxes[i - 1])) {
            broken = "clear winner not strictly better off bidding truthfully";
          }
        } else if (clear_loser && dev > others_top) {
          const std::vector<Value> dev_taxes = mechanism.taxes(bids);
          if (!(taxes[i - 1] > theta[i - 1] + dev_taxes[i - 1])) {
            broken = "clear loser not strictly better off bidding truthfully";
          }
        }
        if (!broken.empty()) {
          Witness w;
          w.theta = theta;
          w.announcements = bids;
          w.values.emplace_back("player", Value(i));
          w.values.emplace_back("deviation", dev);
          w.note = broken;
          attach_outcome(w, mechanism);
          bids[i - 1] = theta[i - 1];
          return w;
        }
      }
      bids[i - 1] = theta[i - 1];
    }
    return std::nullopt;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);
  report.passed = !hit.has_value();
  if (hit) report.witness = std::move(hit->second);
  return report;
}

VerificationReport check_pointwise_optimal(const Strategy& strategy, const Mechanism& mechanism,
                                           const SuiteOptions& opt) {
  VerificationReport report;
  report.suite = "pointwise-optimal:" + mechanism.selector() + ":" + strategy.selector() +
                 ":i=" + std::to_string(strategy.player());
  report.params = params_for(opt, mechanism.selector());
  report.instances = checked_pow(opt.grid.size(), opt.players);
  report.note = "the strategy's bid is a best response when the others announce grid values";
  const int n = opt.players;
  const int i = strategy.player();
  if (i < 1 || i > n) throw std::invalid_argument("player index out of range");
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    const std::vector<Value> theta = nth_tuple(opt.grid.points(), n, index);
    std::vector<Value> bids = theta;
    const Value own =
        strategy.bid(std::span<const Value>(theta).subspan(0, i - 1), theta[i - 1]);
    bids[i - 1] = own;
    const Value u_strategy =
        final_utility(argsmax(bids), mechanism.taxes(bids), i, theta[i - 1]);
    for (const Value& dev : opt.grid.points()) {
      bids[i - 1] = dev;
      const Value u_dev = final_utility(argsmax(bids), mechanism.taxes(bids), i, theta[i - 1]);
      if (u_strategy < u_dev) {
        Witness w;
        w.theta = theta;
        bids[i - 1] = own;
        w.announcements = bids;
        w.values.emplace_back("player", Value(i));
        w.values.emplace_back("strategy_bid", own);
        w.values.emplace_back("strategy_utility", u_strategy);
        w.values.emplace_back("deviation", dev);
        w.values.emplace_back("deviation_utility", u_dev);
        w.note = "a deviation beats the strategy's bid";
        attach_outcome(w, mechanism);
        return w;
      }
    }
    return std::nullopt;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);
  report.passed = !hit.has_value();
  if (hit) report.witness = std::move(hit->second);
  return report;
}

namespace {

const char* constraint_name(ConsistencyConstraint::Kind kind) {
  switch (kind) {
    case ConsistencyConstraint::Kind::forced_truth:
      return "winner-before-last bids the true type";
    case ConsistencyConstraint::Kind::at_most_bound:
      return "loser bids at most the prefix max";
    case ConsistencyConstraint::Kind::above_bound:
      return "winning last player bids above the prefix max";
    case ConsistencyConstraint::Kind::any:
      return "tied last player is unconstrained";
  }
  return "";
}

std::optional<Witness> bid_shape_violation(const Strategy& strategy, const Grid& grid,
                                           int players) {
  const int i = strategy.player();
  const std::uint64_t prefixes = checked_pow(grid.size(), i - 1);
  for (std::uint64_t p = 0; p < prefixes; ++p) {
    const std::vector<Value> prefix = nth_tuple(grid.points(), i - 1, p);
    for (const Value& type : grid.points()) {
      const Value bid = strategy.bid(prefix, type);
      const auto constraint = ConsistencyConstraint::at(prefix, type, i, players);
      if (!constraint.allows(bid)) {
        Witness w;
        w.theta = prefix;
        w.theta.push_back(type);
        w.values.emplace_back("player", Value(i));
        w.values.emplace_back("type", type);
        w.values.emplace_back("bid", bid);
        w.note = std::string("violates: ") + constraint_name(constraint.kind());
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

VerificationReport check_optimal_bid_shape(const Strategy& strategy, const SuiteOptions& opt) {
  VerificationReport report;
  report.suite =
      "lemma4:" + strategy.selector() + ":i=" + std::to_string(strategy.player());
  report.params = params_for(opt);
  report.note = "bids of the strategy satisfy the optimal-bid shape at every prefix and type";
  report.instances = checked_pow(opt.grid.size(), strategy.player());
  auto w = bid_shape_violation(strategy, opt.grid, opt.players);
  report.passed = !w.has_value();
  if (w) report.witness = std::move(w);
  return report;
}

VerificationReport check_optimal_bid_shape_profile(std::string_view selector,
                                                   const SuiteOptions& opt) {
  VerificationReport report;
  report.suite = "lemma4:" + std::string(selector);
  report.params = params_for(opt);
  report.note = "bids of the strategy satisfy the optimal-bid shape at every seat, prefix and "
                "type";
  report.passed = true;
  std::uint64_t instances = 0;
  for (int i = 1; i <= opt.players; ++i) {
    instances += checked_pow(opt.grid.size(), i);
    const Strategy seat = Strategy::from_selector(selector, i, opt.players);
    if (auto w = bid_shape_violation(seat, opt.grid, opt.players)) {
      report.passed = false;
      report.witness = std::move(w);
      break;
    }
  }
  report.instances = instances;
  return report;
}

Strategy broken_bid_shape_fixture(int part, int player, int players) {
  if (player < 1 || player > players) throw std::invalid_argument("player index out of range");
  switch (part) {
    case 1:  // not-last winner shades the bid
      return Strategy(player, false, "broken:1",
                      [](std::span<const Value> prefix, const Value& type) {
                        if (type > prefix_max(prefix)) {
                          const Value shaded = type - Value{1};
                          return shaded > Value{0} ? shaded : Value{0};
                        }
                        return Value{0};
                      });
    case 2:  // last player underbids even when winning
      return Strategy(player, true, "broken:2",
                      [](std::span<const Value>, const Value&) { return Value{0}; });
    case 3:  // not-last loser overbids the prefix max
      return Strategy(player, false, "broken:3",
                      [](std::span<const Value> prefix, const Value& type) {
                        const Value top = prefix_max(prefix);
                        return type > top ? type : top + Value{1};
                      });
    case 4:  // last player overbids when strictly losing
      return Strategy(player, false, "broken:4",
                      [](std::span<const Value> prefix, const Value& type) {
                        const Value top = prefix_max(prefix);
                        if (type > top) return top + Value{1};
                        if (type == top) return type;
                        return top + Value{1};
                      });
    default:
      throw std::invalid_argument("fixture part must be 1..4");
  }
}

VerificationReport check_optimal_bid_shape_fixtures(const SuiteOptions& opt) {
  VerificationReport report;
  report.suite = "lemma4:fixtures";
  report.params = params_for(opt);
  report.passed = true;
  report.note =
      "each deliberately broken strategy must be flagged at its targeted shape case";
  const char* expected[5] = {
      "", "winner-before-last bids the true type", "winning last player bids above the prefix max",
      "loser bids at most the prefix max", "loser bids at most the prefix max"};
  std::uint64_t instances = 0;
  for (int part = 1; part <= 4; ++part) {
    int seat = 0;
    if (part == 1) seat = 1;
    if (part == 3) {
      if (opt.players < 3) continue;  // no middle seat to break
      seat = 2;
    }
    if (part == 2 || part == 4) seat = opt.players;
    instances += checked_pow(opt.grid.size(), seat);
    const Strategy fixture = broken_bid_shape_fixture(part, seat, opt.players);
    auto w = bid_shape_violation(fixture, opt.grid, opt.players);
    const std::string want = std::string("violates: ") + expected[part];
    if (!w || w->note != want) {
      report.passed = false;
      if (w) {
        report.witness = std::move(w);
        report.witness->note += " (expected: " + want + ")";
      } else {
        Witness missing;
        missing.note = "fixture broken:" + std::to_string(part) + " was not flagged";
        report.witness = std::move(missing);
      }
      break;
    }
  }
  report.instances = instances;
  return report;
}

VerificationReport check_consistency_closure(const SuiteOptions& opt) {
  VerificationReport report;
  report.suite = "corollary1";
  report.params = params_for(opt);
  report.instances = checked_pow(opt.grid.size(), opt.players);
  report.note =
      "optimal play preserves prefix maxima, prefix argmax and (up to the last-player tie) "
      "the allocation; designated profiles land inside the consistent set";
  const int n = opt.players;
  const bool with_bc = n >= 3;
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    const std::vector<Value> theta = nth_tuple(opt.grid.points(), n, index);
    const TypeVector types{std::vector<Value>(theta)};
    const auto consistent = consistent_announcements(types, opt.grid);
    auto fail = [&](std::span<const Value> ann, const std::string& note) {
      Witness w;
      w.theta = theta;
      w.announcements.assign(ann.begin(), ann.end());
      w.note = note;
      return w;
    };
    const int true_winner = argsmax(theta);
    const Value theta_n_rivals = kth_highest_excluding(theta, n, 1);
    for (const AnnouncementVector& ann : consistent) {
      const std::span<const Value> a = ann.values();
      for (int i = 1; i <= n - 1; ++i) {
        const auto head_a = a.subspan(0, i);
        const auto head_t = std::span<const Value>(theta).subspan(0, i);
        if (kth_highest(head_a, 1) != kth_highest(head_t, 1)) {
          return fail(a, "prefix max diverged at i=" + std::to_string(i));
        }
        if (argsmax(head_a) != argsmax(head_t)) {
          return fail(a, "prefix argmax diverged at i=" + std::to_string(i));
        }
        if (theta[i - 1] > prefix_max(a.subspan(0, i - 1))) {
          if (!(theta[i - 1] > prefix_max(head_t.subspan(0, i - 1)))) {
            return fail(a, "winner condition unstable at i=" + std::to_string(i));
          }
          for (const AnnouncementVector& other : consistent) {
            if (!(theta[i - 1] > prefix_max(other.values().subspan(0, i - 1)))) {
              return fail(other.values(),
                          "winner condition unstable across profiles at i=" + std::to_string(i));
            }
          }
        }
      }
      const int winner = argsmax(a);
      if (winner != true_winner) {
        const bool tie_exception =
            theta[n - 1] == theta_n_rivals && a[n - 1] > theta[n - 1] && winner == n;
        if (!tie_exception) return fail(a, "allocation changed outside the last-player tie");
      }
    }
    // Membership of the curated profiles, whenever their bids stay on-grid.
    std::vector<StrategyProfile> curated;
    curated.push_back(StrategyProfile::uniform("truth", n));
    curated.push_back(StrategyProfile::uniform("vickrey-opt", n));
    if (with_bc) curated.push_back(StrategyProfile::uniform("bc-opt", n));
    curated.push_back(StrategyProfile::uniform("adversarial", n));
    for (const StrategyProfile& profile : curated) {
      const AnnouncementVector produced = apply_profile(profile, types);
      bool on_grid = true;
      for (const Value& v : produced.values()) {
        if (!opt.grid.contains(v)) on_grid = false;
      }
      if (!on_grid) continue;
      if (!is_consistent(types, produced.values(), opt.grid) ||
          std::find(consistent.begin(), consistent.end(), produced) == consistent.end()) {
        return fail(produced.values(), "profile " + profile.label() + " left the consistent set");
      }
    }
    return std::nullopt;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);
  report.passed = !hit.has_value();
  if (hit) report.witness = std::move(hit->second);
  return report;
}

VerificationReport check_no_dominant(const Mechanism& mechanism, int player,
                                     const SuiteOptions& opt) {
  const int n = opt.players;
  if (player < 1 || player >= n) {
    throw std::invalid_argument("no-dominant check needs a player before the last");
  }
  for (long long needed : {0LL, 1LL, 2LL}) {
    if (!opt.grid.contains(Value(needed))) {
      throw std::invalid_argument("no-dominant construction needs 0, 1 and 2 on the grid");
    }
  }
  VerificationReport report;
  report.suite =
      "no-dominant:" + mechanism.selector() + ":i=" + std::to_string(player);
  report.params = params_for(opt, mechanism.selector());
  report.instances = 1;
  report.note =
      "opponents: truth before the player, adversarial after; any strategy that is optimal "
      "must bid the type here, and a one-off shaded bid beats it";

  std::vector<Value> theta(static_cast<std::size_t>(n), Value{0});
  theta[player - 1] = Value{2};
  const auto prefix = std::span<const Value>(theta).subspan(0, player - 1);
  const auto constraint = ConsistencyConstraint::at(prefix, theta[player - 1], player, n);
  const auto allowed = constraint.allowed(opt.grid);
  const bool forced = allowed.size() == 1 && allowed.front() == theta[player - 1];

  auto rollout = [&](const Value& bid) {
    std::vector<Value> announced(theta.begin(), theta.begin() + (player - 1));
    announced.push_back(bid);
    for (int j = player + 1; j <= n; ++j) {
      announced.push_back(Strategy::adversarial(j).bid(announced, theta[j - 1]));
    }
    return announced;
  };
  const std::vector<Value> truthful = rollout(Value{2});
  const std::vector<Value> shaded = rollout(Value{1});
  const Value u_truthful =
      final_utility(argsmax(truthful), mechanism.taxes(truthful), player, theta[player - 1]);
  const Value u_shaded =
      final_utility(argsmax(shaded), mechanism.taxes(shaded), player, theta[player - 1]);

  bool exact_ok = true;
  if (mechanism.kind() == MechanismKind::vickrey) {
    exact_ok = u_truthful == Value{1} && u_shaded == Value{2};
  }
  report.passed = forced && u_shaded > u_truthful && exact_ok;

  Witness w;
  w.theta = theta;
  w.announcements = truthful;
  w.values.emplace_back("truthful_bid", Value{2});
  w.values.emplace_back("truthful_bid_utility", u_truthful);
  w.values.emplace_back("shaded_bid", Value{1});
  w.values.emplace_back("shaded_bid_utility", u_shaded);
  w.note = "announcements show the truthful rollout; the shaded rollout is (" +
           join_values(shaded) + ")";
  attach_outcome(w, mechanism);
  report.witness = std::move(w);
  return report;
}

VerificationReport check_last_player_dominant(const Mechanism& mechanism,
                                              const SuiteOptions& opt) {
  VerificationReport report;
  report.suite = "last-player-dominant:" + mechanism.selector();
  report.params = params_for(opt, mechanism.selector());
  const int n = opt.players;
  report.instances = checked_pow(opt.grid.size(), n);
  report.note =
      "bid above the prefix max when the type does, at most the prefix max otherwise: every "
      "such bid is a best response against every announced prefix (complete at grid scale, "
      "since the last player's utility depends on opponents only through their announcements)";
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    // First n-1 digits: the announced prefix; last digit: the true type.
    const std::vector<Value> tuple = nth_tuple(opt.grid.points(), n, index);
    const auto prefix = std::span<const Value>(tuple).subspan(0, n - 1);
    const Value& type = tuple[n - 1];
    const Value top = prefix_max(prefix);
    const bool wins = type > top;
    std::vector<Value> bids(prefix.begin(), prefix.end());
    bids.push_back(Value{0});
    for (const Value& shaped : opt.grid.points()) {
      if (wins ? !(shaped > top) : !(shaped <= top)) continue;
      bids[n - 1] = shaped;
      const Value u_shaped = final_utility(argsmax(bids), mechanism.taxes(bids), n, type);
      for (const Value& dev : opt.grid.points()) {
        bids[n - 1] = dev;
        const Value u_dev = final_utility(argsmax(bids), mechanism.taxes(bids), n, type);
        if (u_shaped < u_dev) {
          Witness w;
          w.theta.assign(prefix.begin(), prefix.end());
          w.theta.push_back(type);
          bids[n - 1] = shaped;
          w.announcements = bids;
          w.values.emplace_back("shaped_bid", shaped);
          w.values.emplace_back("shaped_utility", u_shaped);
          w.values.emplace_back("deviation", dev);
          w.values.emplace_back("deviation_utility", u_dev);
          w.note = "a deviation beats the shaped bid";
          attach_outcome(w, mechanism);
          return w;
        }
      }
    }
    return std::nullopt;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);
  report.passed = !hit.has_value();
  if (hit) report.witness = std::move(hit->second);
  return report;
}

namespace {

/// Buckets the consistent announcements of one type vector by the strict
/// prefix before `player` and visits the pairs that differ at the player's
/// own slot: exactly the pairs realizable by switching only that player's
/// optimal strategy while everyone else keeps theirs. on_pair returns true
/// to stop the scan.
struct PairScan {
  template <typename OnPair>
  static void run(const std::vector<AnnouncementVector>& consistent, int player,
                  OnPair&& on_pair) {
    std::map<std::vector<Value>, std::vector<std::size_t>> buckets;
    for (std::size_t k = 0; k < consistent.size(); ++k) {
      const auto vals = consistent[k].values();
      buckets[std::vector<Value>(vals.begin(), vals.begin() + (player - 1))].push_back(k);
    }
    for (const auto& [prefix, members] : buckets) {
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          const std::size_t a = members[x];
          const std::size_t b = members[y];
          if (consistent[a].at(player) == consistent[b].at(player)) continue;
          if (on_pair(a, b)) return;
        }
      }
    }
  }
};

}  // namespace

VerificationReport check_vickrey_utility_equality(const SuiteOptions& opt) {
  const Mechanism mechanism = Mechanism::vickrey(opt.players);
  VerificationReport report;
  report.suite = "vickrey-equality";
  report.params = params_for(opt, mechanism.selector());
  const int n = opt.players;
  report.instances = checked_pow(opt.grid.size(), n);
  std::atomic<std::uint64_t> buckets_total{0};
  std::atomic<std::uint64_t> buckets_constant{0};
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    const std::vector<Value> theta = nth_tuple(opt.grid.points(), n, index);
    const auto consistent = consistent_for(theta, opt.grid);
    std::vector<Outcome> outcomes;
    outcomes.reserve(consistent.size());
    for (const auto& ann : consistent) outcomes.push_back(mechanism.evaluate(ann.values(), theta));
    std::optional<Witness> found;
    for (int i = 1; i <= n && !found; ++i) {
      PairScan::run(consistent, i, [&](std::size_t a, std::size_t b) {
        if (outcomes[a].utilities[i - 1] == outcomes[b].utilities[i - 1]) return false;
        Witness w;
        w.theta = theta;
        w.announcements.assign(consistent[a].values().begin(), consistent[a].values().end());
        w.values.emplace_back("player", Value(i));
        w.values.emplace_back("utility_a", outcomes[a].utilities[i - 1]);
        w.values.emplace_back("utility_b", outcomes[b].utilities[i - 1]);
        w.note = "matched pair disagrees; the paired announcements are (" +
                 join_values(consistent[b].values()) + ")";
        attach_outcome(w, mechanism);
        found = std::move(w);
        return true;
      });
      // Unconditioned constancy measurement (not claimed; reported only).
      std::map<std::vector<Value>, std::vector<std::size_t>> buckets;
      for (std::size_t k = 0; k < consistent.size(); ++k) {
        const auto vals = consistent[k].values();
        buckets[std::vector<Value>(vals.begin(), vals.begin() + (i - 1))].push_back(k);
      }
      for (const auto& [prefix, members] : buckets) {
        buckets_total.fetch_add(1);
        bool constant = true;
        for (std::size_t k = 1; k < members.size(); ++k) {
          if (outcomes[members[k]].utilities[i - 1] != outcomes[members[0]].utilities[i - 1]) {
            constant = false;
          }
        }
        if (constant) buckets_constant.fetch_add(1);
      }
    }
    if (found) return found;
    // Tied last player earns exactly zero under every consistent announcement.
    if (theta[n - 1] == kth_highest_excluding(theta, n, 1)) {
      for (std::size_t k = 0; k < consistent.size(); ++k) {
        if (outcomes[k].utilities[n - 1] != Value{0}) {
          Witness w;
          w.theta = theta;
          w.announcements.assign(consistent[k].values().begin(), consistent[k].values().end());
          w.values.emplace_back("utility_n", outcomes[k].utilities[n - 1]);
          w.note = "tied last player should earn exactly zero";
          attach_outcome(w, mechanism);
          return w;
        }
      }
    }
    return std::nullopt;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);
  report.passed = !hit.has_value();
  if (hit) report.witness = std::move(hit->second);
  report.note = "matched pairs share the prefix before i and differ at i; unconditioned "
                "within-bucket constancy (not claimed) held in " +
                std::to_string(buckets_constant.load()) + "/" +
                std::to_string(buckets_total.load()) + " buckets";
  return report;
}

VerificationReport check_bc_not_utility_equal_search(const SuiteOptions& opt) {
  const Mechanism mechanism = Mechanism::bailey_cavallo(opt.players);
  VerificationReport report;
  report.suite = "bc-not-utility-equal:search";
  report.params = params_for(opt, mechanism.selector());
  const int n = opt.players;
  report.instances = checked_pow(opt.grid.size(), n);
  report.note = "expects a matched pair of optimal announcements with different utilities";
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    const std::vector<Value> theta = nth_tuple(opt.grid.points(), n, index);
    const auto consistent = consistent_for(theta, opt.grid);
    std::vector<Outcome> outcomes;
    outcomes.reserve(consistent.size());
    for (const auto& ann : consistent) outcomes.push_back(mechanism.evaluate(ann.values(), theta));
    std::optional<Witness> found;
    for (int i = 1; i <= n && !found; ++i) {
      PairScan::run(consistent, i, [&](std::size_t a, std::size_t b) {
        if (outcomes[a].utilities[i - 1] == outcomes[b].utilities[i - 1]) return false;
        Witness w;
        w.theta = theta;
        w.announcements.assign(consistent[a].values().begin(), consistent[a].values().end());
        w.values.emplace_back("player", Value(i));
        w.values.emplace_back("utility_a", outcomes[a].utilities[i - 1]);
        w.values.emplace_back("utility_b", outcomes[b].utilities[i - 1]);
        w.note = "paired announcements: (" + join_values(consistent[b].values()) + ")";
        attach_outcome(w, mechanism);
        found = std::move(w);
        return true;
      });
    }
    return found;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);
  report.passed = hit.has_value();
  if (hit) report.witness = std::move(hit->second);
  return report;
}

BcInequalityInstance bc_utility_inequality_instance(std::vector<Value> theta,
                                                    const Value& epsilon, int switcher) {
  const int n = static_cast<int>(theta.size());
  if (n < 3) throw std::invalid_argument("BC requires n >= 3");
  if (switcher < 2 || switcher > n) throw std::invalid_argument("switcher must follow player 1");
  if (epsilon <= Value{0}) throw std::invalid_argument("epsilon must be positive");
  auto losing_bid = [&](std::span<const Value> announced, const Value& type,
                        bool match) -> Value {
    if (type > prefix_max(announced)) return type;
    const Value prev = announced.back();
    if (match) return prev;
    const Value shaded = prev - epsilon;
    return shaded > Value{0} ? shaded : Value{0};
  };
  BcInequalityInstance out;
  out.theta = theta;
  for (int j = 1; j <= n; ++j) {
    if (j == 1) {
      out.bids_undercut.push_back(theta[0]);
      out.bids_match.push_back(theta[0]);
      continue;
    }
    out.bids_undercut.push_back(losing_bid(out.bids_undercut, theta[j - 1], false));
    out.bids_match.push_back(losing_bid(out.bids_match, theta[j - 1], j == switcher));
  }
  out.rebate_undercut =
      kth_highest_excluding(out.bids_undercut, switcher, 2) / Value(static_cast<long long>(n));
  out.rebate_match =
      kth_highest_excluding(out.bids_match, switcher, 2) / Value(static_cast<long long>(n));
  return out;
}

namespace {

VerificationReport bc_inequality_report(const std::string& suite, std::vector<Value> theta,
                                        const SuiteOptions& opt, bool pin_exact) {
  const int n = static_cast<int>(theta.size());
  const Mechanism mechanism = Mechanism::bailey_cavallo(n);
  const Value epsilon = opt.resolved_epsilon();
  if (!(epsilon < theta.front())) {
    throw std::invalid_argument("epsilon must be below the top type of the instance");
  }
  const auto instance = bc_utility_inequality_instance(theta, epsilon, 2);
  VerificationReport report;
  report.suite = suite;
  report.params = params_for(opt, mechanism.selector(), epsilon.str());
  report.params.players = n;
  report.instances = 1;
  report.passed = instance.rebate_match > instance.rebate_undercut;
  if (pin_exact && epsilon == Value{1}) {
    report.passed = report.passed && instance.rebate_undercut == Value::ratio(8, 3) &&
                    instance.rebate_match == Value{3};
  }
  const Outcome under = mechanism.evaluate(instance.bids_undercut, theta);
  const Outcome match = mechanism.evaluate(instance.bids_match, theta);
  Witness w;
  w.theta = theta;
  w.announcements = instance.bids_undercut;
  w.values.emplace_back("epsilon", epsilon);
  w.values.emplace_back("rebate_undercut", instance.rebate_undercut);
  w.values.emplace_back("rebate_match", instance.rebate_match);
  w.values.emplace_back("utility_undercut", under.utilities[1]);
  w.values.emplace_back("utility_match", match.utilities[1]);
  w.note = "player 2 switches from undercutting to matching the previous bid; announcements "
           "then become (" +
           join_values(instance.bids_match) + ")";
  attach_outcome(w, mechanism);
  report.witness = std::move(w);
  report.note = "the rebate to player 2 depends on how later players react";
  return report;
}

}  // namespace

VerificationReport check_bc_not_utility_equal_scaled(const SuiteOptions& opt) {
  if (opt.grid.size() < opt.players) {
    throw std::invalid_argument("grid too small to hold a descending distinct instance");
  }
  std::vector<Value> theta;
  for (int j = 0; j < opt.players; ++j) {
    theta.push_back(opt.grid.points()[opt.grid.size() - 1 - j]);
  }
  return bc_inequality_report("bc-not-utility-equal:scaled", std::move(theta), opt, false);
}

VerificationReport check_bc_not_utility_equal_canonical(const SuiteOptions& opt) {
  SuiteOptions fixed = opt;
  fixed.players = 3;
  return bc_inequality_report("bc-not-utility-equal:canonical", {Value{10}, Value{9}, Value{8}},
                              fixed, true);
}

VerificationReport check_sw_maximal(const Mechanism& mechanism, const SuiteOptions& opt) {
  const StrategyProfile profile = designated_profile(mechanism);
  const bool vickrey = mechanism.kind() == MechanismKind::vickrey;
  VerificationReport report;
  report.suite = std::string("sw-maximal-") + (vickrey ? "vickrey" : "bc");
  report.params = params_for(opt, mechanism.selector());
  const int n = opt.players;
  report.instances = checked_pow(opt.grid.size(), n);
  report.note =
      "designated profile attains the closed-form welfare, never below truth-telling, and at "
      "least the welfare of every consistent optimal announcement";
  const Value two{2};
  const Value nv{static_cast<long long>(n)};
  std::mutex example_mu;
  std::optional<std::pair<std::uint64_t, Witness>> example;
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    const std::vector<Value> theta = nth_tuple(opt.grid.points(), n, index);
    const TypeVector types{std::vector<Value>(theta)};
    const AnnouncementVector designated = apply_profile(profile, types);
    const Outcome designated_out = mechanism.evaluate(designated.values(), theta);
    const Value sw = designated_out.social_welfare;
    const int w = argsmax(theta);

    auto fail = [&](const std::string& note, std::span<const Value> ann) {
      Witness wit;
      wit.theta = theta;
      wit.announcements.assign(ann.begin(), ann.end());
      wit.note = note;
      attach_outcome(wit, mechanism);
      return wit;
    };

    Value closed_form;
    if (vickrey) {
      closed_form = theta[w - 1] - (w > 1 ? prefix_max(theta, w) : Value{0});
    } else {
      closed_form = theta[w - 1] - two / nv * (kth_highest(designated.values(), 2) -
                                               kth_highest(designated.values(), 3));
    }
    if (sw != closed_form) return fail("closed-form welfare mismatch", designated.values());

    const Outcome truth_out = mechanism.evaluate(theta, theta);
    const Value truth_sw = truth_out.social_welfare;
    const Value truth_closed =
        vickrey ? theta[w - 1] - kth_highest_excluding(theta, w, 1)
                : theta[w - 1] - two / nv * (kth_highest(theta, 2) - kth_highest(theta, 3));
    if (truth_sw != truth_closed) return fail("truthful closed-form mismatch", theta);
    if (sw < truth_sw) return fail("designated profile below truth-telling", designated.values());

    if (vickrey && n >= 3) {
      // Descending types with a strictly distinct top three: the gain over
      // truth-telling must be strict.
      bool descending = true;
      for (int i = 1; i < n; ++i) {
        if (theta[i - 1] < theta[i]) descending = false;
      }
      if (descending && theta[0] > theta[1] && theta[1] > theta[2] && !(sw > truth_sw)) {
        return fail("expected a strict gain over truth-telling", designated.values());
      }
    }

    if (!is_consistent(types, designated.values(), opt.grid)) {
      return fail("designated announcements left the consistent set", designated.values());
    }
    for (const AnnouncementVector& ann : consistent_for(theta, opt.grid)) {
      const Value other = mechanism.evaluate(ann.values(), theta).social_welfare;
      if (sw < other) return fail("a consistent announcement earned more welfare", ann.values());
    }

    if (index == 0) {
      Witness wit;
      wit.theta = theta;
      wit.announcements.assign(designated.values().begin(), designated.values().end());
      wit.values.emplace_back("closed_form_sw", closed_form);
      wit.values.emplace_back("truth_sw", truth_sw);
      wit.note = "equality example: the designated announcements attain the maximum";
      attach_outcome(wit, mechanism);
      std::lock_guard<std::mutex> lock(example_mu);
      example.emplace(index, std::move(wit));
    }
    return std::nullopt;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);
  report.passed = !hit.has_value();
  if (hit) {
    report.witness = std::move(hit->second);
  } else if (example) {
    report.witness = std::move(example->second);
  }
  return report;
}

VerificationReport check_socially_maximal_vickrey(const SuiteOptions& opt) {
  const Mechanism mechanism = Mechanism::vickrey(opt.players);
  VerificationReport report;
  report.suite = "vickrey-socially-maximal";
  report.params = params_for(opt, mechanism.selector());
  const int n = opt.players;
  report.instances = checked_pow(opt.grid.size(), n);
  report.note =
      "against truthful others, the designated bid gives every other player at least the "
      "utility of any other optimal bid";
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    const std::vector<Value> theta = nth_tuple(opt.grid.points(), n, index);
    std::vector<Value> bids = theta;
    for (int i = 1; i <= n; ++i) {
      const auto prefix = std::span<const Value>(theta).subspan(0, i - 1);
      const Value designated =
          theta[i - 1] > prefix_max(prefix) ? theta[i - 1] : Value{0};
      bids[i - 1] = designated;
      const Outcome designated_out = mechanism.evaluate(bids, theta);
      const auto allowed = ConsistencyConstraint::at(prefix, theta[i - 1], i, n).allowed(opt.grid);
      for (const Value& other_bid : allowed) {
        bids[i - 1] = other_bid;
        const Outcome other_out = mechanism.evaluate(bids, theta);
        for (int j = 1; j <= n; ++j) {
          if (j == i) continue;
          if (designated_out.utilities[j - 1] < other_out.utilities[j - 1]) {
            Witness w;
            w.theta = theta;
            bids[i - 1] = designated;
            w.announcements = bids;
            w.values.emplace_back("player", Value(i));
            w.values.emplace_back("other_player", Value(j));
            w.values.emplace_back("designated_bid", designated);
            w.values.emplace_back("other_bid", other_bid);
            w.values.emplace_back("utility_designated", designated_out.utilities[j - 1]);
            w.values.emplace_back("utility_other", other_out.utilities[j - 1]);
            w.note = "another optimal bid made some other player better off";
            attach_outcome(w, mechanism);
            return w;
          }
        }
      }
      bids[i - 1] = theta[i - 1];
    }
    return std::nullopt;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);
  report.passed = !hit.has_value();
  if (hit) report.witness = std::move(hit->second);
  return report;
}

namespace {

/// True when, at this instance, every allowed bid is beaten on social welfare
/// by some other allowed bid under some truthful completion.
bool instance_kills_social_optimality(const Mechanism& mechanism, const Grid& grid,
                                      std::span<const Value> head, int player, int n) {
  const auto prefix = head.subspan(0, player - 1);
  const auto allowed =
      ConsistencyConstraint::at(prefix, head[player - 1], player, n).allowed(grid);
  const std::uint64_t completions = checked_pow(grid.size(), n - player);
  std::vector<Value> full(head.begin(), head.end());
  full.resize(static_cast<std::size_t>(n));
  std::vector<Value> bids(full);
  for (const Value& candidate : allowed) {
    bool defeated = false;
    for (std::uint64_t c = 0; c < completions && !defeated; ++c) {
      const std::vector<Value> tail = nth_tuple(grid.points(), n - player, c);
      for (int k = player + 1; k <= n; ++k) full[k - 1] = tail[k - player - 1];
      std::copy(full.begin(), full.end(), bids.begin());
      bids[player - 1] = candidate;
      const Value sw_candidate = mechanism.evaluate(bids, full).social_welfare;
      for (const Value& rival : allowed) {
        bids[player - 1] = rival;
        if (mechanism.evaluate(bids, full).social_welfare > sw_candidate) {
          defeated = true;
          break;
        }
      }
    }
    if (!defeated) return false;
  }
  return true;
}

}  // namespace

VerificationReport check_bc_no_socially_optimal(int player, const SuiteOptions& opt) {
  const int n = opt.players;
  if (player < 1 || player > n) throw std::invalid_argument("player index out of range");
  const Mechanism mechanism = Mechanism::bailey_cavallo(n);
  const bool middle = player >= 2 && player <= n - 1;
  VerificationReport report;
  report.suite = "bc-no-socially-optimal:i=" + std::to_string(player);
  report.params = params_for(opt, mechanism.selector());
  report.instances = checked_pow(opt.grid.size(), player);
  report.note = middle
                    ? "expects an instance where every allowed bid is defeated on welfare by "
                      "another allowed bid under some truthful completion"
                    : "expects no such instance for the first and last player";
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    const std::vector<Value> head = nth_tuple(opt.grid.points(), player, index);
    if (!instance_kills_social_optimality(mechanism, opt.grid, head, player, n)) {
      return std::nullopt;
    }
    Witness w;
    w.theta = head;
    w.note = "announced prefix plus the player's type; every allowed bid is defeated";
    return w;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);

  if (!middle) {
    report.passed = !hit.has_value();
    if (hit) report.witness = std::move(hit->second);
    return report;
  }

  report.passed = hit.has_value();
  if (!report.passed) return report;
  Witness witness = std::move(hit->second);

  // Canonical two-case family for the first middle seat: prefix max M, own
  // type t with a grid value strictly between, defeated case by case.
  if (player == 2) {
    const Value M = opt.grid.back();
    std::optional<Value> t;
    std::optional<Value> between;
    for (int k = opt.grid.size() - 1; k >= 0; --k) {
      const Value& cand = opt.grid.points()[k];
      if (!(cand < M)) continue;
      for (const Value& m : opt.grid.points()) {
        if (cand < m && m < M) {
          bool tail_ok = n == 3;
          for (const Value& low : opt.grid.points()) {
            if (low < cand) tail_ok = true;
          }
          if (tail_ok) {
            t = cand;
            between = m;
            break;
          }
        }
      }
      if (t) break;
    }
    if (!t) {
      report.note += "; grid cannot express the canonical two-case family";
      report.passed = false;
      report.witness = std::move(witness);
      return report;
    }
    Value low = opt.grid.front();  // filler for seats beyond 3, below t
    auto completion = [&](const Value& third) {
      std::vector<Value> full{M, Value{0}, third};
      for (int k = 4; k <= n; ++k) full.push_back(low);
      return full;
    };
    auto sw_for = [&](const Value& bid, const Value& third) {
      std::vector<Value> full = completion(third);
      full[1] = *t;
      std::vector<Value> bids = full;
      bids[1] = bid;
      return mechanism.evaluate(bids, full).social_welfare;
    };
    // Case 1: the truthful bid t is defeated by bidding the in-between value
    // under the in-between completion.
    const Value sw_truth_case1 = sw_for(*t, *between);
    const Value sw_alt_case1 = sw_for(*between, *between);
    bool ok = sw_alt_case1 > sw_truth_case1;
    // Case 2: every other allowed bid is defeated by bidding t when the next
    // player's type equals t.
    const auto allowed = ConsistencyConstraint::at(std::span<const Value>(&M, 1), *t, 2, n)
                             .allowed(opt.grid);
    const Value sw_t_case2 = sw_for(*t, *t);
    for (const Value& b : allowed) {
      if (b == *t) continue;
      if (!(sw_t_case2 > sw_for(b, *t))) ok = false;
    }
    witness.values.emplace_back("family_prefix_max", M);
    witness.values.emplace_back("family_type", *t);
    witness.values.emplace_back("case1_completion", *between);
    witness.values.emplace_back("case1_sw_truthful", sw_truth_case1);
    witness.values.emplace_back("case1_sw_alt", sw_alt_case1);
    witness.values.emplace_back("case2_completion", *t);
    witness.values.emplace_back("case2_sw_truthful", sw_t_case2);
    report.passed = ok;
  }
  report.witness = std::move(witness);
  return report;
}

VerificationReport check_claim_thirdhighest(const SuiteOptions& opt) {
  const int n = opt.players;
  const StrategyProfile profile = StrategyProfile::uniform("bc-opt", n);
  VerificationReport report;
  report.suite = "claim-thirdhighest";
  report.params = params_for(opt, "bailey-cavallo");
  report.instances = checked_pow(opt.grid.size(), n);
  report.note =
      "the designated profile's first n-1 announcements dominate every consistent optimal "
      "announcement entrywise";
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    const std::vector<Value> theta = nth_tuple(opt.grid.points(), n, index);
    const TypeVector types{std::vector<Value>(theta)};
    const AnnouncementVector designated = apply_profile(profile, types);
    for (const AnnouncementVector& other : consistent_announcements(types, opt.grid)) {
      for (int i = 1; i <= n - 1; ++i) {
        if (designated.at(i) < other.at(i)) {
          Witness w;
          w.theta = theta;
          w.announcements.assign(designated.values().begin(), designated.values().end());
          w.values.emplace_back("player", Value(i));
          w.values.emplace_back("designated_bid", designated.at(i));
          w.values.emplace_back("other_bid", other.at(i));
          w.note = "dominated by (" + join_values(other.values()) + ")";
          attach_outcome(w, Mechanism::bailey_cavallo(n));
          return w;
        }
      }
    }
    return std::nullopt;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);
  report.passed = !hit.has_value();
  if (hit) report.witness = std::move(hit->second);
  return report;
}

VerificationReport check_nash_truth(const Mechanism& mechanism, const SuiteOptions& opt) {
  VerificationReport report = check_groves_ic(mechanism, opt);
  report.suite = "nash:truth:" + mechanism.selector();
  report.note = "simultaneous reading: truth-telling is a Nash equilibrium (no profitable "
                "unilateral grid deviation)";
  return report;
}

VerificationReport check_nash_deviation_example() {
  const Mechanism mechanism = Mechanism::vickrey(2);
  VerificationReport report;
  report.suite = "nash:deviation-example";
  report.params.mechanism = mechanism.selector();
  report.params.players = 2;
  report.instances = 1;
  report.note = "outside the optimal class the designated profile is not a Nash equilibrium: "
                "player 1 overbids and the reacting player 2 drops to zero";
  const TypeVector types{{Value{1}, Value{2}}};
  const StrategyProfile profile = StrategyProfile::uniform("vickrey-opt", 2);
  const AnnouncementVector before = apply_profile(profile, types);
  const AnnouncementVector after = apply_profile_with_bid(profile, types, 1, Value{3});
  const Value u_before =
      mechanism.evaluate(before.values(), types.values()).utilities[0];
  const Value u_after = mechanism.evaluate(after.values(), types.values()).utilities[0];
  report.passed = u_before == Value{0} && u_after == Value{1};
  Witness w;
  w.theta = {Value{1}, Value{2}};
  w.announcements.assign(after.values().begin(), after.values().end());
  w.values.emplace_back("deviation_bid", Value{3});
  w.values.emplace_back("utility_designated", u_before);
  w.values.emplace_back("utility_deviation", u_after);
  w.note = "designated announcements were (" + join_values(before.values()) + ")";
  attach_outcome(w, mechanism);
  report.witness = std::move(w);
  return report;
}

VerificationReport check_nash_restricted(const Mechanism& mechanism, const SuiteOptions& opt) {
  const StrategyProfile profile = designated_profile(mechanism);
  VerificationReport report;
  report.suite = "nash:restricted:" + mechanism.selector();
  report.params = params_for(opt, mechanism.selector());
  const int n = opt.players;
  report.instances = checked_pow(opt.grid.size(), n);
  report.note =
      "within optimal strategies: no unilateral deviation from the designated profile is "
      "profitable, and no consistent announcement Pareto-dominates it";
  auto probe = [&](std::uint64_t index) -> std::optional<Witness> {
    const std::vector<Value> theta = nth_tuple(opt.grid.points(), n, index);
    const TypeVector types{std::vector<Value>(theta)};
    const AnnouncementVector designated = apply_profile(profile, types);
    const Outcome base = mechanism.evaluate(designated.values(), theta);
    for (int i = 1; i <= n; ++i) {
      const auto prefix = designated.values().subspan(0, i - 1);
      for (const Value& bid :
           ConsistencyConstraint::at(prefix, theta[i - 1], i, n).allowed(opt.grid)) {
        const AnnouncementVector deviated = apply_profile_with_bid(profile, types, i, bid);
        const Value u_dev = mechanism.evaluate(deviated.values(), theta).utilities[i - 1];
        if (u_dev > base.utilities[i - 1]) {
          Witness w;
          w.theta = theta;
          w.announcements.assign(deviated.values().begin(), deviated.values().end());
          w.values.emplace_back("player", Value(i));
          w.values.emplace_back("deviation_bid", bid);
          w.values.emplace_back("utility_designated", base.utilities[i - 1]);
          w.values.emplace_back("utility_deviation", u_dev);
          w.note = "profitable optimal deviation; designated announcements were (" +
                   join_values(designated.values()) + ")";
          attach_outcome(w, mechanism);
          return w;
        }
      }
    }
    for (const AnnouncementVector& ann : consistent_announcements(types, opt.grid)) {
      const Outcome other = mechanism.evaluate(ann.values(), theta);
      bool weakly_better = true;
      bool strictly = false;
      for (int j = 0; j < n; ++j) {
        if (other.utilities[j] < base.utilities[j]) weakly_better = false;
        if (other.utilities[j] > base.utilities[j]) strictly = true;
      }
      if (weakly_better && strictly) {
        Witness w;
        w.theta = theta;
        w.announcements.assign(ann.values().begin(), ann.values().end());
        w.note = "Pareto-dominates the designated announcements (" +
                 join_values(designated.values()) + ")";
        attach_outcome(w, mechanism);
        return w;
      }
    }
    return std::nullopt;
  };
  auto hit = sweep_first<Witness>(report.instances, opt.jobs, probe);
  report.passed = !hit.has_value();
  if (hit) report.witness = std::move(hit->second);
  return report;
}

}  // namespace seqgroves
