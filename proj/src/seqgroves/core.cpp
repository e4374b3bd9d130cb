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
#include "seqgroves/core.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace seqgroves {

int argsmax(std::span<const Value> values) {
  if (values.empty()) throw std::invalid_argument("empty bid vector");
  int best = 1;
  for (int i = 2; i <= static_cast<int>(values.size()); ++i) {
    if (values[i - 1] > values[best - 1]) best = i;
  }
  return best;
}

Value kth_highest(std::span<const Value> values, int k) {
  if (k < 1 || k > static_cast<int>(values.size())) {
    throw std::invalid_argument("order statistic index out of range");
  }
  std::vector<Value> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<Value>());
  return sorted[k - 1];
}

Value kth_highest_excluding(std::span<const Value> values, int excluded, int k) {
  if (excluded < 1 || excluded > static_cast<int>(values.size())) {
    throw std::invalid_argument("excluded player index out of range");
  }
  std::vector<Value> rest;
  rest.reserve(values.size() - 1);
  for (int i = 1; i <= static_cast<int>(values.size()); ++i) {
    if (i != excluded) rest.push_back(values[i - 1]);
  }
  return kth_highest(rest, k);
}

Value prefix_max(std::span<const Value> values, int player) {
  if (player < 1 || player > static_cast<int>(values.size())) {
    throw std::invalid_argument("player index out of range");
  }
  return prefix_max(values.subspan(0, player - 1));
}

Value prefix_max(std::span<const Value> prefix) {
  Value best{-1};
  for (const Value& v : prefix) {
    if (v > best) best = v;
  }
  return best;
}

Value final_utility(int winner, std::span<const Value> taxes, int player, const Value& type) {
  if (player < 1 || player > static_cast<int>(taxes.size())) {
    throw std::invalid_argument("player index out of range");
  }
  if (winner < 1 || winner > static_cast<int>(taxes.size())) {
    throw std::invalid_argument("winner index out of range");
  }
  if (winner == player) return type + taxes[player - 1];
  return taxes[player - 1];
}

namespace {

void validate_bid_list(const std::vector<Value>& values, const char* what) {
  if (values.size() < 2) {
    throw std::invalid_argument(std::string(what) + " needs at least two players");
  }
  for (const Value& v : values) {
    if (v.negative()) throw std::invalid_argument(std::string(what) + " entry is negative");
  }
}

}  // namespace

TypeVector::TypeVector(std::vector<Value> values) : values_(std::move(values)) {
  validate_bid_list(values_, "type vector");
}

const Value& TypeVector::at(int player) const {
  if (player < 1 || player > players()) throw std::invalid_argument("player index out of range");
  return values_[player - 1];
}

AnnouncementVector::AnnouncementVector(std::vector<Value> values) : values_(std::move(values)) {
  validate_bid_list(values_, "announcement vector");
}

const Value& AnnouncementVector::at(int player) const {
  if (player < 1 || player > players()) throw std::invalid_argument("player index out of range");
  return values_[player - 1];
}

std::string join_values(std::span<const Value> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i].str();
  }
  return out;
}

}  // namespace seqgroves
