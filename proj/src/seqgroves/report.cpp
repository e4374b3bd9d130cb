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
#include "seqgroves/report.hpp"

namespace seqgroves {

using nlohmann::ordered_json;

namespace {

ordered_json strings(const std::vector<Value>& values) {
  ordered_json out = ordered_json::array();
  for (const Value& v : values) out.push_back(v.str());
  return out;
}

}  // namespace

ordered_json to_json(const Witness& witness) {
  ordered_json out;
  out["theta"] = strings(witness.theta);
  out["announcements"] = strings(witness.announcements);
  ordered_json values;
  for (const auto& [name, value] : witness.values) values[name] = value.str();
  out["values"] = std::move(values);
  out["note"] = witness.note;
  return out;
}

ordered_json to_json(const VerificationReport& report) {
  ordered_json out;
  out["suite"] = report.suite;
  out["instances"] = report.instances;
  out["passed"] = report.passed;
  ordered_json params;
  if (!report.params.mechanism.empty()) params["mechanism"] = report.params.mechanism;
  params["n"] = report.params.players;
  params["grid"] = report.params.grid;
  if (!report.params.epsilon.empty()) params["epsilon"] = report.params.epsilon;
  out["params"] = std::move(params);
  if (!report.note.empty()) out["note"] = report.note;
  if (report.witness) out["witness"] = to_json(*report.witness);
  return out;
}

ordered_json to_json(const std::vector<VerificationReport>& reports) {
  ordered_json out = ordered_json::array();
  for (const VerificationReport& r : reports) out.push_back(to_json(r));
  return out;
}

}  // namespace seqgroves
