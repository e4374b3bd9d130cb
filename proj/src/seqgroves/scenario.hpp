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

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "seqgroves/mechanisms.hpp"
#include "seqgroves/strategies.hpp"

namespace seqgroves {

/// One simulation request: a mechanism, true types, and a strategy per seat.
/// Rationals travel as strings.
struct ScenarioConfig {
  int players = 0;
  std::string mechanism;
  std::vector<std::string> types;
  std::vector<std::string> profile;  // one selector, or one per player
  std::string output = "table";

  static ScenarioConfig from_json_text(const std::string& text);
  nlohmann::ordered_json to_json() const;
};

struct ComparisonRow {
  std::string profile_label;
  std::vector<Value> announcements;
  int winner = 0;
  std::vector<Value> taxes;
  std::vector<Value> utilities;
  Value aggregate_tax;
  Value social_welfare;
};

/// Runs the configured profile plus the truth-telling baseline.
/// Cross-checks sum-of-utilities == winner value + aggregate tax and throws
/// InternalError on disagreement.
std::vector<ComparisonRow> simulate(const ScenarioConfig& config);

/// "table", "csv" (profile,player,announced,winner,tax,utility,sw; one row per
/// player plus an "all" summary row) or "json".
std::string render_rows(const ScenarioConfig& config, const std::vector<ComparisonRow>& rows,
                        std::string_view format);

}  // namespace seqgroves
