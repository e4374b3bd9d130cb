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

#include <span>
#include <string>
#include <vector>

#include "seqgroves/value.hpp"

namespace seqgroves {

// Player indices are 1-based throughout.

/// Index of the largest entry, lowest index winning ties.
/// Throws std::invalid_argument("empty bid vector") on an empty sequence.
int argsmax(std::span<const Value> values);

/// k-th largest entry counted with multiplicity (k is 1-based).
Value kth_highest(std::span<const Value> values, int k);

/// k-th largest entry of the sequence with position `excluded` removed.
Value kth_highest_excluding(std::span<const Value> values, int excluded, int k);

/// Max of values[1..player-1]; -1 for player == 1, so that any type >= 0
/// strictly exceeds the empty prefix.
Value prefix_max(std::span<const Value> values, int player);

/// Max of the whole (possibly empty) announced prefix, -1 sentinel if empty.
Value prefix_max(std::span<const Value> prefix);

/// type + tax for the winner, tax alone for everyone else.
Value final_utility(int winner, std::span<const Value> taxes, int player, const Value& type);

/// The received (true) types: n >= 2 non-negative values.
class TypeVector {
 public:
  explicit TypeVector(std::vector<Value> values);
  int players() const { return static_cast<int>(values_.size()); }
  const Value& at(int player) const;
  std::span<const Value> values() const { return values_; }

 private:
  std::vector<Value> values_;
};

/// The submitted bids; same shape and constraints as TypeVector.
class AnnouncementVector {
 public:
  explicit AnnouncementVector(std::vector<Value> values);
  int players() const { return static_cast<int>(values_.size()); }
  const Value& at(int player) const;
  std::span<const Value> values() const { return values_; }

  friend bool operator==(const AnnouncementVector& a, const AnnouncementVector& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Value> values_;
};

struct Outcome {
  int winner = 0;
  std::vector<Value> taxes;
  std::vector<Value> utilities;
  Value social_welfare;
};

std::string join_values(std::span<const Value> values, std::string_view sep = ",");

}  // namespace seqgroves
