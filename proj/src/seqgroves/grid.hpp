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
#include <string_view>
#include <vector>

#include "seqgroves/value.hpp"

namespace seqgroves {

/// Finite ascending set of non-negative values used to discretize the type
/// space for exhaustive sweeps.
class Grid {
 public:
  static Grid integer_range(long long lo, long long hi);

  /// "<lo>..<hi>[:<step>]", all rational ("0..4", "0..2:1/2").
  static Grid parse(std::string_view spec);

  /// Explicit points; must be ascending, distinct and non-negative.
  static Grid from_points(std::vector<Value> points, Value step = Value{1});

  int size() const { return static_cast<int>(points_.size()); }
  std::span<const Value> points() const { return points_; }
  const Value& front() const { return points_.front(); }
  const Value& back() const { return points_.back(); }
  const Value& step() const { return step_; }
  bool contains(const Value& v) const;

  /// Canonical spec string, "lo..hi" or "lo..hi:step".
  std::string spec() const;

 private:
  Grid(std::vector<Value> points, Value step);

  std::vector<Value> points_;
  Value step_;
};

}  // namespace seqgroves
