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
#include "seqgroves/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace seqgroves {

Grid::Grid(std::vector<Value> points, Value step)
    : points_(std::move(points)), step_(std::move(step)) {
  if (points_.empty()) throw std::invalid_argument("empty grid");
  if (points_.front().negative()) throw std::invalid_argument("grid contains a negative value");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1] < points_[i])) {
      throw std::invalid_argument("grid values must be strictly ascending");
    }
  }
  if (step_ <= Value{0}) throw std::invalid_argument("grid step must be positive");
}

Grid Grid::integer_range(long long lo, long long hi) {
  return parse(Value(lo).str() + ".." + Value(hi).str());
}

Grid Grid::from_points(std::vector<Value> points, Value step) {
  return Grid(std::move(points), std::move(step));
}

Grid Grid::parse(std::string_view spec) {
  const auto dots = spec.find("..");
  if (dots == std::string_view::npos) {
    throw ParseError("grid spec must look like <lo>..<hi>[:<step>]: \"" + std::string(spec) +
                     "\"");
  }
  const std::string_view lo_text = spec.substr(0, dots);
  std::string_view rest = spec.substr(dots + 2);
  std::string_view step_text = "1";
  if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
    step_text = rest.substr(colon + 1);
    rest = rest.substr(0, colon);
  }
  const Value lo = Value::parse(lo_text);
  const Value hi = Value::parse(rest);
  const Value step = Value::parse(step_text);
  if (lo.negative()) throw std::invalid_argument("grid contains a negative value");
  if (step <= Value{0}) throw std::invalid_argument("grid step must be positive");
  if (hi < lo) throw std::invalid_argument("grid upper bound below lower bound");
  std::vector<Value> points;
  for (Value v = lo; v <= hi; v += step) {
    if (points.size() > 4096) throw std::invalid_argument("grid too large");
    points.push_back(v);
  }
  return Grid(std::move(points), step);
}

bool Grid::contains(const Value& v) const {
  return std::binary_search(points_.begin(), points_.end(), v);
}

std::string Grid::spec() const {
  std::string out = points_.front().str() + ".." + points_.back().str();
  if (step_ != Value{1}) out += ":" + step_.str();
  return out;
}

}  // namespace seqgroves
