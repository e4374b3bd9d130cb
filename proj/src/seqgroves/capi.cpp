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
#include "seqgroves.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "seqgroves/oracle.hpp"
#include "seqgroves/scenario.hpp"

struct sqg_mechanism {
  seqgroves::Mechanism impl;
};

struct sqg_outcome {
  seqgroves::Outcome impl;
};

namespace {

thread_local std::string g_last_error;

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename Fn>
sqg_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return SQG_OK;
  } catch (const seqgroves::ParseError& e) {
    g_last_error = e.what();
    const std::string what = e.what();
    return what.find("unknown suite") != std::string::npos ||
                   what.find("unknown counterexample") != std::string::npos
               ? SQG_ERROR_UNKNOWN_NAME
               : SQG_ERROR_PARSE;
  } catch (const seqgroves::InternalError& e) {
    g_last_error = e.what();
    return SQG_ERROR_INTERNAL;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SQG_ERROR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return SQG_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SQG_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SQG_ERROR_INTERNAL;
  }
}

std::vector<seqgroves::Value> parse_csv_values(const char* text, const char* what) {
  if (text == nullptr) throw std::invalid_argument(std::string(what) + " is null");
  std::vector<seqgroves::Value> out;
  std::string_view rest{text};
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(seqgroves::Value::parse(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

sqg_status outcome_field(const sqg_outcome* outcome, int player, char** out, bool tax) {
  return guarded([&] {
    if (outcome == nullptr || out == nullptr) {
      throw std::invalid_argument("outcome and out must be non-null");
    }
    const auto& list = tax ? outcome->impl.taxes : outcome->impl.utilities;
    if (player < 1 || player > static_cast<int>(list.size())) {
      throw std::invalid_argument("player index out of range");
    }
    *out = copy_out(list[player - 1].str());
  });
}

}  // namespace

extern "C" {

const char* sqg_status_name(sqg_status status) {
  switch (status) {
    case SQG_OK:
      return "ok";
    case SQG_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case SQG_ERROR_PARSE:
      return "parse error";
    case SQG_ERROR_UNKNOWN_NAME:
      return "unknown name";
    case SQG_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* sqg_last_error(void) { return g_last_error.c_str(); }

void sqg_string_free(char* text) { std::free(text); }

sqg_status sqg_mechanism_create(const char* selector, int players, sqg_mechanism** out) {
  return guarded([&] {
    if (selector == nullptr || out == nullptr) {
      throw std::invalid_argument("selector and out must be non-null");
    }
    *out = new sqg_mechanism{seqgroves::Mechanism::from_selector(selector, players)};
  });
}

void sqg_mechanism_destroy(sqg_mechanism* mechanism) { delete mechanism; }

sqg_status sqg_mechanism_run(const sqg_mechanism* mechanism, const char* bids, const char* types,
                             sqg_outcome** out) {
  return guarded([&] {
    if (mechanism == nullptr || out == nullptr) {
      throw std::invalid_argument("mechanism and out must be non-null");
    }
    const seqgroves::AnnouncementVector announced{parse_csv_values(bids, "bids")};
    const seqgroves::TypeVector theta{parse_csv_values(types, "types")};
    *out = new sqg_outcome{seqgroves::run_mechanism(mechanism->impl, announced, theta)};
  });
}

void sqg_outcome_destroy(sqg_outcome* outcome) { delete outcome; }

int sqg_outcome_players(const sqg_outcome* outcome) {
  return outcome == nullptr ? 0 : static_cast<int>(outcome->impl.taxes.size());
}

int sqg_outcome_winner(const sqg_outcome* outcome) {
  return outcome == nullptr ? 0 : outcome->impl.winner;
}

sqg_status sqg_outcome_tax(const sqg_outcome* outcome, int player, char** out) {
  return outcome_field(outcome, player, out, true);
}

sqg_status sqg_outcome_utility(const sqg_outcome* outcome, int player, char** out) {
  return outcome_field(outcome, player, out, false);
}

sqg_status sqg_outcome_social_welfare(const sqg_outcome* outcome, char** out) {
  return guarded([&] {
    if (outcome == nullptr || out == nullptr) {
      throw std::invalid_argument("outcome and out must be non-null");
    }
    *out = copy_out(outcome->impl.social_welfare.str());
  });
}

sqg_status sqg_simulate(const char* scenario_json, const char* format, char** out) {
  return guarded([&] {
    if (scenario_json == nullptr || out == nullptr) {
      throw std::invalid_argument("scenario and out must be non-null");
    }
    const auto config = seqgroves::ScenarioConfig::from_json_text(scenario_json);
    const auto rows = seqgroves::simulate(config);
    *out = copy_out(
        seqgroves::render_rows(config, rows, format != nullptr ? format : config.output));
  });
}

sqg_status sqg_verify(const char* suite, int players, const char* grid, const char* epsilon,
                      int jobs, char** report_json, int* all_passed) {
  return guarded([&] {
    if (suite == nullptr || report_json == nullptr || all_passed == nullptr) {
      throw std::invalid_argument("suite, report_json and all_passed must be non-null");
    }
    seqgroves::SuiteOptions opt;
    if (players > 0) opt.players = players;
    if (grid != nullptr) opt.grid = seqgroves::Grid::parse(grid);
    if (epsilon != nullptr) opt.epsilon = seqgroves::Value::parse(epsilon);
    if (jobs > 0) opt.jobs = jobs;
    const auto reports = seqgroves::run_suites(suite, opt);
    bool passed = true;
    for (const auto& r : reports) passed = passed && r.passed;
    *all_passed = passed ? 1 : 0;
    *report_json = copy_out(seqgroves::to_json(reports).dump(2) + "\n");
  });
}

sqg_status sqg_suite_list(char** names_json) {
  return guarded([&] {
    if (names_json == nullptr) throw std::invalid_argument("names_json must be non-null");
    nlohmann::ordered_json names = seqgroves::suite_names();
    *names_json = copy_out(names.dump() + "\n");
  });
}

sqg_status sqg_counterexample(const char* name, const char* epsilon, char** report_json) {
  return guarded([&] {
    if (name == nullptr || report_json == nullptr) {
      throw std::invalid_argument("name and report_json must be non-null");
    }
    std::optional<seqgroves::Value> eps;
    if (epsilon != nullptr) eps = seqgroves::Value::parse(epsilon);
    *report_json = copy_out(seqgroves::counterexample_report(name, eps).dump(2) + "\n");
  });
}

}  // extern "C"
