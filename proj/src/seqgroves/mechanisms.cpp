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
#include "seqgroves/mechanisms.hpp"

#include <stdexcept>
#include <utility>

#include "seqgroves/sweep.hpp"

namespace seqgroves {

std::vector<Value> pivotal_tax(std::span<const Value> bids) {
  if (bids.size() < 2) throw std::invalid_argument("pivotal tax needs at least two players");
  std::vector<Value> taxes(bids.size(), Value{0});
  const int winner = argsmax(bids);
  taxes[winner - 1] = -kth_highest(bids, 2);
  return taxes;
}

Value bc_redistribution(std::span<const Value> bids, int player) {
  if (bids.size() < 3) throw std::invalid_argument("BC requires n >= 3");
  return kth_highest_excluding(bids, player, 2) / Value(static_cast<long long>(bids.size()));
}

std::vector<Value> bc_tax(std::span<const Value> bids) {
  std::vector<Value> taxes = pivotal_tax(bids);
  for (int i = 1; i <= static_cast<int>(bids.size()); ++i) {
    taxes[i - 1] += bc_redistribution(bids, i);
  }
  return taxes;
}

Mechanism::Mechanism(MechanismKind kind, int players, std::string selector,
                     RedistributionFn redistribution)
    : kind_(kind),
      players_(players),
      selector_(std::move(selector)),
      redistribution_(std::move(redistribution)) {
  if (players_ < 2) throw std::invalid_argument("mechanism needs at least two players");
  if (kind_ == MechanismKind::bailey_cavallo && players_ < 3) {
    throw std::invalid_argument("BC requires n >= 3");
  }
}

Mechanism Mechanism::vickrey(int players) {
  return Mechanism(MechanismKind::vickrey, players, "vickrey", nullptr);
}

Mechanism Mechanism::bailey_cavallo(int players) {
  return Mechanism(MechanismKind::bailey_cavallo, players, "bailey-cavallo", nullptr);
}

Mechanism Mechanism::groves(int players, std::string name, RedistributionFn redistribution) {
  if (!redistribution) throw std::invalid_argument("groves mechanism needs a redistribution");
  return Mechanism(MechanismKind::groves, players, "groves:" + name, std::move(redistribution));
}

Mechanism Mechanism::from_selector(std::string_view selector, int players) {
  if (selector == "vickrey") return vickrey(players);
  if (selector == "bailey-cavallo") return bailey_cavallo(players);
  constexpr std::string_view kPrefix = "groves:";
  if (selector.substr(0, kPrefix.size()) == kPrefix) {
    const std::string name(selector.substr(kPrefix.size()));
    if (name == "bc") {
      if (players < 3) throw std::invalid_argument("BC requires n >= 3");
      return groves(players, name, [](std::span<const Value> others) {
        return kth_highest(others, 2) / Value(static_cast<long long>(others.size() + 1));
      });
    }
    if (name == "zero") {
      return groves(players, name, [](std::span<const Value>) { return Value{0}; });
    }
    if (name == "top") {
      return groves(players, name,
                    [](std::span<const Value> others) { return kth_highest(others, 1); });
    }
    if (name == "neg-top") {
      return groves(players, name,
                    [](std::span<const Value> others) { return -kth_highest(others, 1); });
    }
  }
  throw ParseError("unknown mechanism selector: \"" + std::string(selector) + "\"");
}

std::vector<Value> Mechanism::taxes(std::span<const Value> bids) const {
  if (static_cast<int>(bids.size()) != players_) {
    throw std::invalid_argument("bid vector length mismatch");
  }
  switch (kind_) {
    case MechanismKind::vickrey:
      return pivotal_tax(bids);
    case MechanismKind::bailey_cavallo:
      return bc_tax(bids);
    case MechanismKind::groves: {
      std::vector<Value> taxes = pivotal_tax(bids);
      std::vector<Value> others;
      others.reserve(bids.size() - 1);
      for (int i = 1; i <= players_; ++i) {
        others.clear();
        for (int j = 1; j <= players_; ++j) {
          if (j != i) others.push_back(bids[j - 1]);
        }
        taxes[i - 1] += redistribution_(others);
      }
      return taxes;
    }
  }
  throw InternalError("unreachable mechanism kind");
}

Outcome Mechanism::evaluate(std::span<const Value> bids, std::span<const Value> types) const {
  if (bids.size() != types.size()) throw std::invalid_argument("bid/type length mismatch");
  Outcome out;
  out.winner = argsmax(bids);
  out.taxes = taxes(bids);
  out.utilities.reserve(bids.size());
  for (int i = 1; i <= players_; ++i) {
    out.utilities.push_back(final_utility(out.winner, out.taxes, i, types[i - 1]));
    out.social_welfare += out.utilities.back();
  }
  return out;
}

Outcome run_mechanism(const Mechanism& mechanism, const AnnouncementVector& bids,
                      const TypeVector& types) {
  if (bids.players() != types.players() || bids.players() != mechanism.players()) {
    throw std::invalid_argument("bid/type length mismatch");
  }
  return mechanism.evaluate(bids.values(), types.values());
}

bool check_feasible(const Mechanism& mechanism, const AnnouncementVector& bids) {
  Value total;
  for (const Value& t : mechanism.taxes(bids.values())) total += t;
  return total <= Value{0};
}

std::optional<IcViolation> check_incentive_compatible(const Mechanism& mechanism,
                                                      std::span<const Value> grid, int n,
                                                      int jobs) {
  if (grid.empty()) return std::nullopt;  // vacuous
  const std::uint64_t space = checked_pow(grid.size(), n);
  auto probe = [&](std::uint64_t index) -> std::optional<IcViolation> {
    const std::vector<Value> theta = nth_tuple(grid, n, index);
    const Outcome truthful = mechanism.evaluate(theta, theta);
    std::vector<Value> bids = theta;
    for (int i = 1; i <= n; ++i) {
      for (const Value& dev : grid) {
        bids[i - 1] = dev;
        const std::vector<Value> taxes = mechanism.taxes(bids);
        const Value u_dev = final_utility(argsmax(bids), taxes, i, theta[i - 1]);
        if (truthful.utilities[i - 1] < u_dev) {
          return IcViolation{theta, i, dev, truthful.utilities[i - 1], u_dev};
        }
      }
      bids[i - 1] = theta[i - 1];
    }
    return std::nullopt;
  };
  auto hit = sweep_first<IcViolation>(space, jobs, probe);
  if (!hit) return std::nullopt;
  return hit->second;
}

}  // namespace seqgroves
