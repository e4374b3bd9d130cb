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
#include "seqgroves/scenario.hpp"

#include <sstream>
#include <stdexcept>

namespace seqgroves {

using nlohmann::ordered_json;

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  ScenarioConfig config;
  try {
    config.players = doc.at("n").get<int>();
    config.mechanism = doc.at("mechanism").get<std::string>();
    config.types = doc.at("types").get<std::vector<std::string>>();
    const auto& profile = doc.at("profile");
    if (profile.is_string()) {
      config.profile = {profile.get<std::string>()};
    } else {
      config.profile = profile.get<std::vector<std::string>>();
    }
    if (doc.contains("output")) config.output = doc.at("output").get<std::string>();
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("bad scenario field: ") + e.what());
  }
  return config;
}

ordered_json ScenarioConfig::to_json() const {
  ordered_json doc;
  doc["n"] = players;
  doc["mechanism"] = mechanism;
  doc["types"] = types;
  doc["profile"] = profile;
  doc["output"] = output;
  return doc;
}

namespace {

ComparisonRow make_row(const Mechanism& mechanism, const TypeVector& types,
                       const StrategyProfile& profile) {
  const AnnouncementVector announced = apply_profile(profile, types);
  const Outcome outcome = run_mechanism(mechanism, announced, types);
  ComparisonRow row;
  row.profile_label = profile.label();
  row.announcements.assign(announced.values().begin(), announced.values().end());
  row.winner = outcome.winner;
  row.taxes = outcome.taxes;
  row.utilities = outcome.utilities;
  for (const Value& t : outcome.taxes) row.aggregate_tax += t;
  row.social_welfare = outcome.social_welfare;
  // Two routes to the social welfare must agree exactly: sum of utilities,
  // and winner's value plus the aggregate tax.
  Value by_sum;
  for (const Value& u : outcome.utilities) by_sum += u;
  if (by_sum != row.social_welfare ||
      row.social_welfare != types.at(outcome.winner) + row.aggregate_tax) {
    throw InternalError("social welfare cross-check failed");
  }
  return row;
}

StrategyProfile profile_from_selectors(const std::vector<std::string>& selectors, int players) {
  if (selectors.size() == 1) return StrategyProfile::uniform(selectors.front(), players);
  if (static_cast<int>(selectors.size()) != players) {
    throw ParseError("profile needs one selector or one per player");
  }
  std::vector<Strategy> strategies;
  strategies.reserve(selectors.size());
  for (int i = 1; i <= players; ++i) {
    strategies.push_back(Strategy::from_selector(selectors[i - 1], i, players));
  }
  return StrategyProfile(std::move(strategies));
}

}  // namespace

std::vector<ComparisonRow> simulate(const ScenarioConfig& config) {
  if (config.players < 2) throw ParseError("scenario needs n >= 2");
  if (static_cast<int>(config.types.size()) != config.players) {
    throw ParseError("scenario needs one type per player");
  }
  std::vector<Value> types;
  types.reserve(config.types.size());
  for (const std::string& t : config.types) {
    const Value v = Value::parse(t);
    if (v.negative()) throw ParseError("types must be non-negative: \"" + t + "\"");
    types.push_back(v);
  }
  const TypeVector theta{std::move(types)};
  const Mechanism mechanism = Mechanism::from_selector(config.mechanism, config.players);
  const StrategyProfile configured = profile_from_selectors(config.profile, config.players);

  std::vector<ComparisonRow> rows;
  rows.push_back(make_row(mechanism, theta, configured));
  rows.push_back(make_row(mechanism, theta, StrategyProfile::uniform("truth", config.players)));
  return rows;
}

namespace {

ordered_json row_json(const ComparisonRow& row) {
  ordered_json out;
  out["profile"] = row.profile_label;
  ordered_json ann = ordered_json::array();
  for (const Value& v : row.announcements) ann.push_back(v.str());
  out["announcements"] = std::move(ann);
  out["winner"] = row.winner;
  ordered_json taxes = ordered_json::array();
  for (const Value& v : row.taxes) taxes.push_back(v.str());
  out["taxes"] = std::move(taxes);
  ordered_json utilities = ordered_json::array();
  for (const Value& v : row.utilities) utilities.push_back(v.str());
  out["utilities"] = std::move(utilities);
  out["aggregate_tax"] = row.aggregate_tax.str();
  out["social_welfare"] = row.social_welfare.str();
  return out;
}

std::string render_csv(const std::vector<ComparisonRow>& rows) {
  std::string out = "profile,player,announced,winner,tax,utility,sw\n";
  for (const ComparisonRow& row : rows) {
    Value total_utility;
    for (int i = 1; i <= static_cast<int>(row.announcements.size()); ++i) {
      out += row.profile_label + "," + std::to_string(i) + "," + row.announcements[i - 1].str() +
             "," + std::to_string(row.winner) + "," + row.taxes[i - 1].str() + "," +
             row.utilities[i - 1].str() + "," + row.social_welfare.str() + "\n";
      total_utility += row.utilities[i - 1];
    }
    out += row.profile_label + ",all,," + std::to_string(row.winner) + "," +
           row.aggregate_tax.str() + "," + total_utility.str() + "," +
           row.social_welfare.str() + "\n";
  }
  return out;
}

std::string render_table(const ScenarioConfig& config, const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "mechanism: " << config.mechanism << "   types: (";
  for (std::size_t i = 0; i < config.types.size(); ++i) {
    if (i) out << ", ";
    out << config.types[i];
  }
  out << ")\n";
  for (const ComparisonRow& row : rows) {
    out << "\nprofile " << row.profile_label << "  ->  winner " << row.winner
        << ", aggregate tax " << row.aggregate_tax.str() << ", social welfare "
        << row.social_welfare.str() << "\n";
    out << "  player  announced  tax  utility\n";
    for (int i = 1; i <= static_cast<int>(row.announcements.size()); ++i) {
      out << "  " << i << "  " << row.announcements[i - 1].str() << "  "
          << row.taxes[i - 1].str() << "  " << row.utilities[i - 1].str() << "\n";
    }
  }
  return out.str();
}

}  // namespace

std::string render_rows(const ScenarioConfig& config, const std::vector<ComparisonRow>& rows,
                        std::string_view format) {
  if (format == "csv") return render_csv(rows);
  if (format == "json") {
    ordered_json out;
    out["scenario"] = config.to_json();
    ordered_json list = ordered_json::array();
    for (const ComparisonRow& row : rows) list.push_back(row_json(row));
    out["rows"] = std::move(list);
    return out.dump(2) + "\n";
  }
  if (format == "table") return render_table(config, rows);
  throw ParseError("unknown output format: \"" + std::string(format) + "\"");
}

}  // namespace seqgroves
