/*
   Copyright 2026 The distset authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to the distset library.
 *
 * Exact upper bounds for point sets in R^d realizing few distances, with
 * squared distances in an algebraic number field: a residue-counting bound
 * searched over prime ideals, a refinement from the integrality and degree
 * of the distance ratios, and an exact verification pass over the proof
 * matrices.
 *
 * All functions are re-entrant. Problems are opaque handles; results are
 * heap-allocated JSON strings released with ds_string_free(). On failure
 * *error_message (when non-NULL) receives a diagnostic, also released with
 * ds_string_free().
 */

#ifndef DISTSET_DISTSET_H
#define DISTSET_DISTSET_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ds_status {
  DS_OK = 0,
  DS_ERR_INPUT = 2,      /* malformed or out-of-contract input */
  DS_ERR_CAPABILITY = 3, /* valid input the operation cannot serve */
  DS_ERR_INTERNAL = 4    /* invariant violation; report a bug */
} ds_status;

/* Stable name for a status value, e.g. "DS_ERR_INPUT". */
const char* ds_status_name(ds_status status);

typedef struct ds_options {
  int64_t prime_limit; /* search rational primes <= this; >= 2 */
  uint64_t seed;       /* randomized factorization seed; output-stable */
} ds_options;

/* Fills in the defaults: prime_limit = 1000, seed = 0. */
void ds_options_init(ds_options* opts);

/* A parsed problem: a number field, an ambient dimension, and either a
 * point configuration or a direct list of squared distances. */
typedef struct ds_problem ds_problem;

/* Parses the documented input JSON. On DS_OK, *out owns the problem. */
ds_status ds_problem_from_json(const char* json_text, ds_problem** out, char** error_message);
ds_status ds_problem_from_file(const char* path, ds_problem** out, char** error_message);
void ds_problem_free(ds_problem* prob);

/* Full report: absolute bound, best mod-p certificate, ratio analysis,
 * and the minimum of all applicable bounds. */
ds_status ds_run_bound(const ds_problem* prob, const ds_options* opts, char** json_out,
                       char** error_message);

/* Mod-p certificate search only. */
ds_status ds_run_certify(const ds_problem* prob, const ds_options* opts, char** json_out,
                         char** error_message);

/* Ratio analysis only; needs at least 2 distance values. */
ds_status ds_run_lrs(const ds_problem* prob, const ds_options* opts, char** json_out,
                     char** error_message);

/* Proof-matrix verification; DS_ERR_CAPABILITY for direct distance input. */
ds_status ds_run_verify(const ds_problem* prob, const ds_options* opts, char** json_out,
                        char** error_message);

/* Table of the bound-space dimensions for s = 0..s_max in R^d. */
ds_status ds_dim_table(int64_t d, int64_t s_max, char** json_out, char** error_message);

/* Releases any string returned through json_out or error_message. */
void ds_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* DISTSET_DISTSET_H */
