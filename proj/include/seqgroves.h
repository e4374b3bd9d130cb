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
#ifndef SEQGROVES_H
#define SEQGROVES_H

/*
 * C API of the sequential Groves auction engine.
 *
 * Every function returns an sqg_status; on failure sqg_last_error() holds a
 * thread-local message describing what went wrong. Rational amounts cross the
 * boundary as strings ("4", "2.5", "10/3"); emitted values are always in
 * lowest terms ("p/q", "/1" elided). Strings returned through char** are
 * heap-allocated and must be released with sqg_string_free(). Player indices
 * are 1-based.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sqg_status {
  SQG_OK = 0,
  SQG_ERROR_INVALID_ARGUMENT = 1, /* precondition violated */
  SQG_ERROR_PARSE = 2,            /* malformed rational, selector, grid or JSON */
  SQG_ERROR_UNKNOWN_NAME = 3,     /* unknown suite or counterexample name */
  SQG_ERROR_INTERNAL = 4          /* internal cross-check failed */
} sqg_status;

typedef struct sqg_mechanism sqg_mechanism;
typedef struct sqg_outcome sqg_outcome;

const char* sqg_status_name(sqg_status status);

/* Message for the most recent failing call on this thread ("" if none). */
const char* sqg_last_error(void);

void sqg_string_free(char* text);

/* --- mechanisms ---------------------------------------------------------- */

/* selector: "vickrey" | "bailey-cavallo" | "groves:<bc|zero|top|neg-top>". */
sqg_status sqg_mechanism_create(const char* selector, int players, sqg_mechanism** out);
void sqg_mechanism_destroy(sqg_mechanism* mechanism);

/* bids/types: comma-separated rationals, e.g. "3,5,4". */
sqg_status sqg_mechanism_run(const sqg_mechanism* mechanism, const char* bids, const char* types,
                             sqg_outcome** out);

void sqg_outcome_destroy(sqg_outcome* outcome);
int sqg_outcome_players(const sqg_outcome* outcome);
int sqg_outcome_winner(const sqg_outcome* outcome);
sqg_status sqg_outcome_tax(const sqg_outcome* outcome, int player, char** out);
sqg_status sqg_outcome_utility(const sqg_outcome* outcome, int player, char** out);
sqg_status sqg_outcome_social_welfare(const sqg_outcome* outcome, char** out);

/* --- scenario simulation ------------------------------------------------- */

/*
 * scenario_json: {"n":3, "mechanism":"vickrey", "types":["3","5","4"],
 *                 "profile":["vickrey-opt", ...] | "vickrey-opt",
 *                 "output":"table|csv|json"}.
 * format: rendering override, or NULL to honor the scenario's "output".
 * Runs the configured profile plus a truth-telling baseline.
 */
sqg_status sqg_simulate(const char* scenario_json, const char* format, char** out);

/* --- verification suites -------------------------------------------------- */

/*
 * suite: one of the registered names (sqg_suite_list), or "all".
 * players <= 0 and NULL grid/epsilon select the defaults (n=3, grid "0..4",
 * epsilon = grid step). grid: "<lo>..<hi>[:<step>]". jobs <= 0 means 1.
 * *report_json receives a JSON array of reports; *all_passed is 1 when every
 * expected result holds.
 */
sqg_status sqg_verify(const char* suite, int players, const char* grid, const char* epsilon,
                      int jobs, char** report_json, int* all_passed);

sqg_status sqg_suite_list(char** names_json);

/* --- counterexample reproductions ----------------------------------------- */

/*
 * name: "bc-not-dominant" | "nash-deviation" | "no-dominant" |
 *       "bc-no-socially-optimal". epsilon: rational or NULL for the default.
 * The report embeds re-runnable scenarios for each evaluation.
 */
sqg_status sqg_counterexample(const char* name, const char* epsilon, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SEQGROVES_H */
