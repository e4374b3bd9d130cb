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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqgroves/core.hpp"

namespace seqgroves {

/// One re-checkable instance: the type vector, the announcements under
/// scrutiny, and the named quantities the check compared. Values always
/// include u1..un and sw for the recorded announcements so the instance can
/// be replayed through the simulator verbatim.
struct Witness {
  std::vector<Value> theta;
  std::vector<Value> announcements;
  std::vector<std::pair<std::string, Value>> values;
  std::string note;
};

struct SuiteParams {
  std::string mechanism;  // selector; empty when mechanism-independent
  int players = 0;
  std::string grid;
  std::string epsilon;  // set only by the suites that use it
};

struct VerificationReport {
  std::string suite;
  std::uint64_t instances = 0;
  bool passed = false;
  SuiteParams params;
  std::optional<Witness> witness;
  std::string note;
};

nlohmann::ordered_json to_json(const Witness& witness);
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const std::vector<VerificationReport>& reports);

}  // namespace seqgroves
