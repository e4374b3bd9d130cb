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
#include <stdexcept>

#include "seqgroves/oracle.hpp"

namespace seqgroves {

ConsistencyConstraint ConsistencyConstraint::at(std::span<const Value> prefix, const Value& type,
                                                int player, int players) {
  if (static_cast<int>(prefix.size()) != player - 1) {
    throw std::invalid_argument("announced prefix length mismatch");
  }
  if (player < 1 || player > players) throw std::invalid_argument("player index out of range");
  const Value top = prefix_max(prefix);
  if (player < players) {
    if (type > top) return ConsistencyConstraint(Kind::forced_truth, type);
    return ConsistencyConstraint(Kind::at_most_bound, top);
  }
  if (type > top) return ConsistencyConstraint(Kind::above_bound, top);
  if (type < top) return ConsistencyConstraint(Kind::at_most_bound, top);
  return ConsistencyConstraint(Kind::any, top);
}

bool ConsistencyConstraint::allows(const Value& bid) const {
  if (bid.negative()) return false;
  switch (kind_) {
    case Kind::forced_truth:
      return bid == bound_;
    case Kind::at_most_bound:
      return bid <= bound_;
    case Kind::above_bound:
      return bid > bound_;
    case Kind::any:
      return true;
  }
  return false;
}

std::vector<Value> ConsistencyConstraint::allowed(const Grid& grid) const {
  std::vector<Value> out;
  if (kind_ == Kind::forced_truth) {
    out.push_back(bound_);
    return out;
  }
  for (const Value& v : grid.points()) {
    if (allows(v)) out.push_back(v);
  }
  return out;
}

namespace {

void enumerate(const TypeVector& types, const Grid& grid, std::vector<Value>& current,
               std::vector<AnnouncementVector>& out) {
  const int player = static_cast<int>(current.size()) + 1;
  if (player > types.players()) {
    out.emplace_back(current);
    return;
  }
  const auto constraint =
      ConsistencyConstraint::at(current, types.at(player), player, types.players());
  for (const Value& bid : constraint.allowed(grid)) {
    current.push_back(bid);
    enumerate(types, grid, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<AnnouncementVector> consistent_announcements(const TypeVector& types,
                                                         const Grid& grid) {
  for (int i = 1; i <= types.players(); ++i) {
    if (!grid.contains(types.at(i))) {
      throw std::invalid_argument("type outside grid: " + types.at(i).str());
    }
  }
  std::vector<AnnouncementVector> out;
  std::vector<Value> current;
  current.reserve(static_cast<std::size_t>(types.players()));
  enumerate(types, grid, current, out);
  return out;
}

bool is_consistent(const TypeVector& types, std::span<const Value> announcements,
                   const Grid& grid) {
  if (static_cast<int>(announcements.size()) != types.players()) return false;
  for (int i = 1; i <= types.players(); ++i) {
    if (!grid.contains(announcements[i - 1])) return false;
    const auto constraint = ConsistencyConstraint::at(announcements.subspan(0, i - 1),
                                                      types.at(i), i, types.players());
    if (!constraint.allows(announcements[i - 1])) return false;
  }
  return true;
}

}  // namespace seqgroves
