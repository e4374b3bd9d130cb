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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqgroves/core.hpp"

namespace seqgroves {

enum class MechanismKind { vickrey, bailey_cavallo, groves };

/// Rebate paid to a player, computed from the other players' bids only.
using RedistributionFn = std::function<Value(std::span<const Value> others)>;

/// Pivotal taxes: the winner pays the second-highest bid, everyone else pays
/// nothing. Requires n >= 2.
std::vector<Value> pivotal_tax(std::span<const Value> bids);

/// Bailey-Cavallo rebate for one player: second-highest of the others' bids,
/// divided by n. Requires n >= 3.
Value bc_redistribution(std::span<const Value> bids, int player);

/// Pivotal tax plus Bailey-Cavallo rebate, per player. Requires n >= 3.
std::vector<Value> bc_tax(std::span<const Value> bids);

/// Decision rule (argsmax, lowest index wins ties) plus one of the tax rules:
/// pivotal, Bailey-Cavallo, or pivotal + a custom redistribution.
class Mechanism {
 public:
  static Mechanism vickrey(int players);
  static Mechanism bailey_cavallo(int players);
  static Mechanism groves(int players, std::string name, RedistributionFn redistribution);

  /// "vickrey" | "bailey-cavallo" | "groves:<name>" with named redistributions
  /// bc, zero, top, neg-top. Throws ParseError on unknown selectors.
  static Mechanism from_selector(std::string_view selector, int players);

  MechanismKind kind() const { return kind_; }
  int players() const { return players_; }
  const std::string& selector() const { return selector_; }

  std::vector<Value> taxes(std::span<const Value> bids) const;

  /// Winner, taxes, utilities (against the true types) and social welfare.
  /// Sizes are checked; bid/type ranges are the callers' responsibility.
  Outcome evaluate(std::span<const Value> bids, std::span<const Value> types) const;

 private:
  Mechanism(MechanismKind kind, int players, std::string selector, RedistributionFn redistribution);

  MechanismKind kind_;
  int players_;
  std::string selector_;
  RedistributionFn redistribution_;  // groves only
};

/// Fully validated entry point composing the decision and tax rules.
Outcome run_mechanism(const Mechanism& mechanism, const AnnouncementVector& bids,
                      const TypeVector& types);

/// Aggregate tax <= 0.
bool check_feasible(const Mechanism& mechanism, const AnnouncementVector& bids);

struct IcViolation {
  std::vector<Value> theta;
  int player = 0;
  Value deviation;
  Value truthful_utility;
  Value deviating_utility;
};

/// Exhaustive truthfulness check over grid^n: for every type vector, player
/// and grid deviation, truth-telling must earn at least as much. Returns the
/// lexicographically-first violation (theta, then player, then deviation).
std::optional<IcViolation> check_incentive_compatible(const Mechanism& mechanism,
                                                      std::span<const Value> grid, int n,
                                                      int jobs = 1);

}  // namespace seqgroves
