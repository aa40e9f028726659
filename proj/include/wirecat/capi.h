/* Copyright 2026 The wirecat authors
 *
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

/* C interface of the wirecat shared library.
 *
 * Semigroups are opaque handles created from Cayley-table text (see the
 * README for the format) and freed with wirecat_semigroup_free.  Report
 * functions allocate their output strings; release them with
 * wirecat_string_free.  Every function returns WIRECAT_OK on success; on
 * failure the output pointer is set to NULL and wirecat_last_error()
 * holds a message (thread-local, valid until the next library call on the
 * same thread).
 */

#ifndef WIRECAT_CAPI_H_
#define WIRECAT_CAPI_H_

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wirecat_status {
  WIRECAT_OK = 0,
  WIRECAT_ERROR_ARGUMENT = 1,
  WIRECAT_ERROR_PARSE = 2,
  WIRECAT_ERROR_VALIDATION = 3,
  WIRECAT_ERROR_SIZE_BOUND = 4,
  WIRECAT_ERROR_VERIFY_FAILED = 5,
  WIRECAT_ERROR_INTERNAL = 6
} wirecat_status;

typedef struct wirecat_semigroup wirecat_semigroup;

const char* wirecat_version(void);
const char* wirecat_status_name(wirecat_status status);
const char* wirecat_last_error(void);
void wirecat_string_free(char* text);

/* Construction and basic access. */
wirecat_status wirecat_semigroup_parse(const char* text,
                                       wirecat_semigroup** out);
wirecat_status wirecat_semigroup_read_file(const char* path,
                                           wirecat_semigroup** out);
wirecat_status wirecat_semigroup_from_table(int n, const int* table,
                                            wirecat_semigroup** out);
wirecat_status wirecat_fixture(const char* name, wirecat_semigroup** out);
void wirecat_semigroup_free(wirecat_semigroup* s);
int wirecat_semigroup_order(const wirecat_semigroup* s);
wirecat_status wirecat_semigroup_format(const wirecat_semigroup* s,
                                        char** out);

/* Reports.  max_arrows <= 0 selects the library default (512). */
wirecat_status wirecat_analyze_report(const wirecat_semigroup* s, char** out);
wirecat_status wirecat_karoubi_summary(const wirecat_semigroup* s,
                                       int max_arrows, char** out);
wirecat_status wirecat_karoubi_json(const wirecat_semigroup* s,
                                    int max_arrows, char** out);
wirecat_status wirecat_theta_report(const wirecat_semigroup* s,
                                    int max_arrows, char** out);
wirecat_status wirecat_factorize_report(const wirecat_semigroup* s,
                                        int max_arrows, char** out);

/* Induced semigroups on T(S), emitted as Cayley-table text. */
wirecat_status wirecat_induced_writer(const wirecat_semigroup* s0,
                                      const wirecat_semigroup* s, char** out);
wirecat_status wirecat_induced_nepow(const wirecat_semigroup* s, char** out);

/* Constant classification; transfer may be NULL. */
wirecat_status wirecat_constants_report_writer(
    const wirecat_semigroup* s0, const wirecat_semigroup* transfer,
    int size_bound, char** out);
wirecat_status wirecat_constants_report_nepow(
    const wirecat_semigroup* transfer, int size_bound, char** out);

/* All labeled semigroups of the given order as `---`-separated tables. */
wirecat_status wirecat_enumerate_corpus(int order, char** out);

/* Runs a verification suite (all, regularity, adjunction, theta,
 * semigroupad, constants).  The report is returned even when checks fail;
 * failures yield WIRECAT_ERROR_VERIFY_FAILED. */
wirecat_status wirecat_verify(const char* suite, int max_order,
                              int max_arrows, char** out);

#ifdef __cplusplus
}
#endif

#endif /* WIRECAT_CAPI_H_ */
