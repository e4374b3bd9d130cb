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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqgroves/grid.hpp"
#include "seqgroves/mechanisms.hpp"
#include "seqgroves/report.hpp"
#include "seqgroves/strategies.hpp"

namespace seqgroves {

/// The set of bids a player can submit under *some* optimal strategy, given
/// the announced prefix and the player's true type. Pointwise, for a Groves
/// auction:
///   - not last, type beats the prefix: exactly the true type;
///   - not last, otherwise:             anything up to the prefix max;
///   - last, type beats the prefix:     anything above the prefix max;
///   - last, type below the prefix max: anything up to the prefix max;
///   - last, type ties the prefix max:  anything at all.
class ConsistencyConstraint {
 public:
  enum class Kind { forced_truth, at_most_bound, above_bound, any };

  static ConsistencyConstraint at(std::span<const Value> prefix, const Value& type, int player,
                                  int players);

  Kind kind() const { return kind_; }
  const Value& bound() const { return bound_; }
  bool allows(const Value& bid) const;
  std::vector<Value> allowed(const Grid& grid) const;

 private:
  ConsistencyConstraint(Kind kind, Value bound) : kind_(kind), bound_(std::move(bound)) {}

  Kind kind_;
  Value bound_;  // the forced truthful bid, or the prefix max
};

/// Every grid-valued announcement vector obtainable when each player follows
/// some optimal strategy, in lexicographic order. All type entries must lie
/// on the grid.
std::vector<AnnouncementVector> consistent_announcements(const TypeVector& types,
                                                         const Grid& grid);

/// Independent membership re-check: replays the per-position constraint.
bool is_consistent(const TypeVector& types, std::span<const Value> announcements,
                   const Grid& grid);

struct SuiteOptions {
  int players = 3;
  Grid grid = Grid::integer_range(0, 4);
  std::optional<Value> epsilon;  // defaults to the grid step
  int jobs = 1;

  Value resolved_epsilon() const;
};

// Mechanism-level sweeps.
VerificationReport check_groves_ic(const Mechanism& mechanism, const SuiteOptions& opt);
VerificationReport check_feasibility(const Mechanism& mechanism, const SuiteOptions& opt);
VerificationReport check_clear_winner_loser_bounds(const Mechanism& mechanism,
                                                   const SuiteOptions& opt);

// Optimal-play characterization.
VerificationReport check_pointwise_optimal(const Strategy& strategy, const Mechanism& mechanism,
                                           const SuiteOptions& opt);
VerificationReport check_optimal_bid_shape(const Strategy& strategy, const SuiteOptions& opt);
VerificationReport check_optimal_bid_shape_profile(std::string_view selector,
                                                   const SuiteOptions& opt);
VerificationReport check_optimal_bid_shape_fixtures(const SuiteOptions& opt);
VerificationReport check_consistency_closure(const SuiteOptions& opt);

/// Deliberately non-optimal strategy violating one of the four bid-shape
/// cases (1: not-last winner shades, 2: last winner underbids, 3: not-last
/// loser overbids, 4: last loser overbids). Used to prove the checker flags
/// each violation path.
Strategy broken_bid_shape_fixture(int part, int player, int players);

// Dominance.
VerificationReport check_no_dominant(const Mechanism& mechanism, int player,
                                     const SuiteOptions& opt);
VerificationReport check_last_player_dominant(const Mechanism& mechanism, const SuiteOptions& opt);

/// The two optimal profiles behind the BC utility-inequality instance: under
/// `undercut` every losing player bids the previous announcement minus
/// epsilon (clamped at zero); under `match`, player `switcher` bids the
/// previous announcement unchanged instead.
struct BcInequalityInstance {
  std::vector<Value> theta;
  std::vector<Value> bids_undercut;
  std::vector<Value> bids_match;
  Value rebate_undercut;
  Value rebate_match;
};
BcInequalityInstance bc_utility_inequality_instance(std::vector<Value> theta,
                                                    const Value& epsilon, int switcher);

// Utility equality / inequality across optimal play.
VerificationReport check_vickrey_utility_equality(const SuiteOptions& opt);
VerificationReport check_bc_not_utility_equal_search(const SuiteOptions& opt);
VerificationReport check_bc_not_utility_equal_scaled(const SuiteOptions& opt);
VerificationReport check_bc_not_utility_equal_canonical(const SuiteOptions& opt);

// Social welfare.
VerificationReport check_sw_maximal(const Mechanism& mechanism, const SuiteOptions& opt);
VerificationReport check_socially_maximal_vickrey(const SuiteOptions& opt);
VerificationReport check_bc_no_socially_optimal(int player, const SuiteOptions& opt);
VerificationReport check_claim_thirdhighest(const SuiteOptions& opt);

// Nash checks for the simultaneous reading.
VerificationReport check_nash_truth(const Mechanism& mechanism, const SuiteOptions& opt);
VerificationReport check_nash_deviation_example();
VerificationReport check_nash_restricted(const Mechanism& mechanism, const SuiteOptions& opt);

/// Suite registry driving `verify --suite <name>`.
std::vector<std::string> suite_names();
std::vector<VerificationReport> run_suites(std::string_view name, const SuiteOptions& opt);

/// Named counterexample reproductions for `counterexample <name>`.
std::vector<std::string> counterexample_names();
nlohmann::ordered_json counterexample_report(std::string_view name,
                                             const std::optional<Value>& epsilon);

}  // namespace seqgroves
