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
#include "seqgroves/strategies.hpp"

#include <stdexcept>
#include <utility>

namespace seqgroves {

Strategy::Strategy(int player, bool myopic, std::string selector, BidFn fn)
    : player_(player), myopic_(myopic), selector_(std::move(selector)), fn_(std::move(fn)) {
  if (player_ < 1) throw std::invalid_argument("player index out of range");
  if (!fn_) throw std::invalid_argument("strategy without a bid function");
}

Value Strategy::bid(std::span<const Value> prefix, const Value& type) const {
  if (static_cast<int>(prefix.size()) != player_ - 1) {
    throw std::invalid_argument("announced prefix length mismatch");
  }
  return fn_(prefix, type);
}

Strategy Strategy::truth(int player) {
  return Strategy(player, true, "truth",
                  [](std::span<const Value>, const Value& type) { return type; });
}

Strategy Strategy::vickrey_optimal(int player) {
  return Strategy(player, false, "vickrey-opt",
                  [](std::span<const Value> prefix, const Value& type) {
                    return type > prefix_max(prefix) ? type : Value{0};
                  });
}

Strategy Strategy::bc_optimal(int player, int players) {
  if (players < 3) throw std::invalid_argument("BC requires n >= 3");
  if (player > players) throw std::invalid_argument("player index out of range");
  const bool last = player == players;
  return Strategy(player, false, "bc-opt",
                  [last](std::span<const Value> prefix, const Value& type) {
                    if (type > prefix_max(prefix)) return type;
                    // Losing: match the highest current bid; the last player
                    // matches the second-highest instead.
                    return last ? kth_highest(prefix, 2) : kth_highest(prefix, 1);
                  });
}

Strategy Strategy::adversarial(int player) {
  return Strategy(player, false, "adversarial",
                  [](std::span<const Value> prefix, const Value& type) {
                    const Value top = prefix_max(prefix);
                    if (type > top) return type;
                    const Value shaded = top - Value{1};
                    return shaded > Value{0} ? shaded : Value{0};
                  });
}

Strategy Strategy::constant(int player, const Value& amount) {
  if (amount.negative()) throw std::invalid_argument("constant bid is negative");
  return Strategy(player, true, "constant:" + amount.str(),
                  [amount](std::span<const Value>, const Value&) { return amount; });
}

Strategy Strategy::from_selector(std::string_view selector, int player, int players) {
  if (selector == "truth") return truth(player);
  if (selector == "vickrey-opt") return vickrey_optimal(player);
  if (selector == "bc-opt") return bc_optimal(player, players);
  if (selector == "adversarial") return adversarial(player);
  constexpr std::string_view kPrefix = "constant:";
  if (selector.substr(0, kPrefix.size()) == kPrefix) {
    return constant(player, Value::parse(selector.substr(kPrefix.size())));
  }
  throw ParseError("unknown strategy selector: \"" + std::string(selector) + "\"");
}

StrategyProfile::StrategyProfile(std::vector<Strategy> strategies)
    : strategies_(std::move(strategies)) {
  if (strategies_.size() < 2) throw std::invalid_argument("profile needs at least two players");
  for (int i = 1; i <= players(); ++i) {
    if (strategies_[i - 1].player() != i) {
      throw std::invalid_argument("profile slot does not match its player index");
    }
  }
}

const Strategy& StrategyProfile::at(int player) const {
  if (player < 1 || player > players()) throw std::invalid_argument("player index out of range");
  return strategies_[player - 1];
}

StrategyProfile StrategyProfile::uniform(std::string_view selector, int players) {
  std::vector<Strategy> list;
  list.reserve(static_cast<std::size_t>(players));
  for (int i = 1; i <= players; ++i) list.push_back(Strategy::from_selector(selector, i, players));
  return StrategyProfile(std::move(list));
}

std::string StrategyProfile::label() const {
  bool uniform = true;
  for (const Strategy& s : strategies_) {
    if (s.selector() != strategies_.front().selector()) uniform = false;
  }
  if (uniform) return strategies_.front().selector();
  std::string out;
  for (const Strategy& s : strategies_) {
    if (!out.empty()) out += '+';
    out += s.selector();
  }
  return out;
}

namespace {

std::vector<Value> roll_forward(const StrategyProfile& profile, const TypeVector& types,
                                int override_player, const Value* override_bid) {
  if (profile.players() != types.players()) {
    throw std::invalid_argument("profile/type length mismatch");
  }
  std::vector<Value> announced;
  announced.reserve(static_cast<std::size_t>(types.players()));
  for (int i = 1; i <= types.players(); ++i) {
    if (i == override_player) {
      announced.push_back(*override_bid);
    } else {
      announced.push_back(profile.at(i).bid(announced, types.at(i)));
    }
  }
  return announced;
}

}  // namespace

AnnouncementVector apply_profile(const StrategyProfile& profile, const TypeVector& types) {
  return AnnouncementVector(roll_forward(profile, types, 0, nullptr));
}

AnnouncementVector apply_profile_with_bid(const StrategyProfile& profile, const TypeVector& types,
                                          int player, const Value& bid) {
  if (player < 1 || player > types.players()) {
    throw std::invalid_argument("player index out of range");
  }
  return AnnouncementVector(roll_forward(profile, types, player, &bid));
}

Value social_welfare(const Mechanism& mechanism, const TypeVector& types,
                     const StrategyProfile& profile) {
  return run_mechanism(mechanism, apply_profile(profile, types), types).social_welfare;
}

}  // namespace seqgroves
