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
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "seqgroves.h"

// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 internal invariant violation.

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int exit_code_for(sqg_status status) {
  switch (status) {
    case SQG_OK:
      return kExitOk;
    case SQG_ERROR_INVALID_ARGUMENT:
    case SQG_ERROR_PARSE:
    case SQG_ERROR_UNKNOWN_NAME:
      return kExitUsage;
    case SQG_ERROR_INTERNAL:
      return kExitInternal;
  }
  return kExitInternal;
}

int report_failure(sqg_status status) {
  std::cerr << "error (" << sqg_status_name(status) << "): " << sqg_last_error() << "\n";
  return exit_code_for(status);
}

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { sqg_string_free(text); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequential Groves auction engine: exact simulation and exhaustive verification"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_format;
  std::string suite = "all";
  std::string grid;
  std::string epsilon;
  std::string counterexample_name;
  int players = 0;
  int jobs = 1;

  CLI::App* simulate = app.add_subcommand(
      "simulate", "run a scenario file under its profile plus a truth-telling baseline");
  simulate->add_option("--scenario", scenario_path, "path to a scenario JSON file")->required();
  simulate->add_option("--out", out_format, "table|csv|json (overrides the scenario's output)");
  simulate->add_option("--jobs", jobs, "accepted for symmetry; simulation is single-threaded");

  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite and print its JSON reports");
  verify->add_option("--suite", suite, "suite name, or \"all\"");
  verify->add_option("--n", players, "number of players (default 3)");
  verify->add_option("--grid", grid, "type grid <lo>..<hi>[:<step>] (default 0..4)");
  verify->add_option("--epsilon", epsilon, "counterexample epsilon (default: grid step)");
  verify->add_option("--jobs", jobs, "worker threads for the sweeps");

  CLI::App* counterexample = app.add_subcommand(
      "counterexample", "reproduce a named counterexample with re-runnable scenarios");
  counterexample->add_option("name", counterexample_name, "bc-not-dominant | nash-deviation | no-dominant | bc-no-socially-optimal")
      ->required();
  counterexample->add_option("--epsilon", epsilon, "epsilon for the instance (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (simulate->parsed()) {
    std::ifstream file(scenario_path);
    if (!file) {
      std::cerr << "error: cannot read scenario file: " << scenario_path << "\n";
      return kExitUsage;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    OwnedString rendered;
    const sqg_status status = sqg_simulate(
        buffer.str().c_str(), out_format.empty() ? nullptr : out_format.c_str(), &rendered.text);
    if (status != SQG_OK) return report_failure(status);
    std::cout << rendered.text;
    return kExitOk;
  }

  if (verify->parsed()) {
    OwnedString report;
    int all_passed = 0;
    const sqg_status status =
        sqg_verify(suite.c_str(), players, grid.empty() ? nullptr : grid.c_str(),
                   epsilon.empty() ? nullptr : epsilon.c_str(), jobs, &report.text, &all_passed);
    if (status != SQG_OK) return report_failure(status);
    std::cout << report.text;
    return all_passed == 1 ? kExitOk : kExitVerificationFailed;
  }

  OwnedString report;
  const sqg_status status = sqg_counterexample(
      counterexample_name.c_str(), epsilon.empty() ? nullptr : epsilon.c_str(), &report.text);
  if (status != SQG_OK) return report_failure(status);
  std::cout << report.text;
  return kExitOk;
}
