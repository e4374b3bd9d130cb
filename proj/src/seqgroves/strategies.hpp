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
#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqgroves/core.hpp"
#include "seqgroves/mechanisms.hpp"

namespace seqgroves {

/// A bidding rule for one player: maps the announced prefix (the bids already
/// on the table) and the player's own true type to a bid. Myopic strategies
/// ignore the prefix entirely.
class Strategy {
 public:
  using BidFn = std::function<Value(std::span<const Value> prefix, const Value& type)>;

  Strategy(int player, bool myopic, std::string selector, BidFn fn);

  int player() const { return player_; }
  bool myopic() const { return myopic_; }
  const std::string& selector() const { return selector_; }

  /// Requires prefix.size() == player-1.
  Value bid(std::span<const Value> prefix, const Value& type) const;

  /// Always bids the true type.
  static Strategy truth(int player);

  /// Bids the true type when it beats the announced prefix, 0 otherwise.
  static Strategy vickrey_optimal(int player);

  /// Bids the true type when winning; otherwise matches the highest current
  /// bid, except that the last player matches the second-highest. n >= 3.
  static Strategy bc_optimal(int player, int players);

  /// Bids the true type when winning, max(prefix max - 1, 0) otherwise.
  static Strategy adversarial(int player);

  /// Always bids the same non-negative amount.
  static Strategy constant(int player, const Value& amount);

  /// "truth" | "vickrey-opt" | "bc-opt" | "adversarial" | "constant:<rational>".
  static Strategy from_selector(std::string_view selector, int player, int players);

 private:
  int player_;
  bool myopic_;
  std::string selector_;
  BidFn fn_;
};

/// One strategy per player, in seating order.
class StrategyProfile {
 public:
  explicit StrategyProfile(std::vector<Strategy> strategies);

  int players() const { return static_cast<int>(strategies_.size()); }
  const Strategy& at(int player) const;

  /// The same selector for every seat.
  static StrategyProfile uniform(std::string_view selector, int players);

  /// Uniform selector, or the per-seat selectors joined with '+'.
  std::string label() const;

 private:
  std::vector<Strategy> strategies_;
};

/// The announcements that result when each player applies their strategy to
/// the bids announced so far (not the true types) and their own type.
AnnouncementVector apply_profile(const StrategyProfile& profile, const TypeVector& types);

/// Same, but player `player` announces `bid` instead of following their
/// strategy; later players react to the altered prefix.
AnnouncementVector apply_profile_with_bid(const StrategyProfile& profile, const TypeVector& types,
                                          int player, const Value& bid);

Value social_welfare(const Mechanism& mechanism, const TypeVector& types,
                     const StrategyProfile& profile);

}  // namespace seqgroves
