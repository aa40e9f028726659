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

/* Compiled as plain C: the shared library must be usable without any C++
 * toolchain on the consumer side. */

#include <stdio.h>
#include <string.h>

#include "wirecat/capi.h"

static int failures = 0;

static void expect(int condition, const char* what) {
  if (!condition) {
    fprintf(stderr, "FAIL %s\n", what);
    ++failures;
  }
}

int main(void) {
  wirecat_semigroup* s = NULL;
  char* text = NULL;

  expect(wirecat_semigroup_parse("2\n0 1\n1 0\n", &s) == WIRECAT_OK,
         "parse Z2");
  expect(wirecat_semigroup_order(s) == 2, "order");

  expect(wirecat_karoubi_summary(s, 0, &text) == WIRECAT_OK, "summary");
  expect(strncmp(text, "1 objects, 2 arrows\n", 20) == 0, "summary content");
  wirecat_string_free(text);
  text = NULL;

  expect(wirecat_induced_nepow(s, &text) == WIRECAT_OK, "induced");
  expect(strcmp(text, "3\n0 1 2\n1 0 2\n2 2 2\n") == 0, "induced content");
  wirecat_string_free(text);
  text = NULL;
  wirecat_semigroup_free(s);
  s = NULL;

  expect(wirecat_semigroup_parse("2\n0 1\n", &s) == WIRECAT_ERROR_PARSE,
         "parse error status");
  expect(s == NULL, "handle stays NULL on failure");
  expect(strlen(wirecat_last_error()) > 0, "error message");

  expect(wirecat_semigroup_from_table(-1, (const int[]){0}, &s) ==
             WIRECAT_ERROR_ARGUMENT,
         "negative order rejected");

  expect(wirecat_verify("regularity", 1, 0, &text) == WIRECAT_OK, "verify");
  expect(strstr(text, "RESULT PASS") != NULL, "verify content");
  wirecat_string_free(text);

  if (failures == 0) {
    printf("capi smoke ok\n");
    return 0;
  }
  return 1;
}
