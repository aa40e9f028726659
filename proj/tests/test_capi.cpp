// Copyright 2026 The wirecat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wirecat/capi.h"

#include <doctest.h>

#include <string>

namespace {

struct Guard {
  wirecat_semigroup* s = nullptr;
  char* text = nullptr;
  ~Guard() {
    wirecat_semigroup_free(s);
    wirecat_string_free(text);
  }
};

}  // namespace

TEST_CASE("capi parse, format and order") {
  Guard g;
  REQUIRE(wirecat_semigroup_parse("2\n0 1\n1 0\n", &g.s) == WIRECAT_OK);
  CHECK(wirecat_semigroup_order(g.s) == 2);
  REQUIRE(wirecat_semigroup_format(g.s, &g.text) == WIRECAT_OK);
  CHECK(std::string(g.text) == "2\n0 1\n1 0\n");
}

TEST_CASE("capi parse errors carry messages") {
  Guard g;
  CHECK(wirecat_semigroup_parse("2\n0 1\n", &g.s) == WIRECAT_ERROR_PARSE);
  CHECK(g.s == nullptr);
  CHECK(std::string(wirecat_last_error()).find("line") != std::string::npos);

  CHECK(wirecat_semigroup_parse("2\n1 0\n0 0\n", &g.s) ==
        WIRECAT_ERROR_VALIDATION);
  CHECK(wirecat_semigroup_parse(nullptr, &g.s) == WIRECAT_ERROR_ARGUMENT);
}

TEST_CASE("capi fixtures and reports") {
  Guard g;
  REQUIRE(wirecat_fixture("SL2", &g.s) == WIRECAT_OK);
  REQUIRE(wirecat_karoubi_summary(g.s, 0, &g.text) == WIRECAT_OK);
  CHECK(std::string(g.text).rfind("2 objects, 5 arrows\n", 0) == 0);

  Guard bad;
  CHECK(wirecat_fixture("nope", &bad.s) == WIRECAT_ERROR_VALIDATION);
}

TEST_CASE("capi from_table validates") {
  Guard g;
  int table[] = {0, 0, 0, 5};
  CHECK(wirecat_semigroup_from_table(2, table, &g.s) ==
        WIRECAT_ERROR_VALIDATION);
  int lz[] = {0, 0, 1, 1};
  CHECK(wirecat_semigroup_from_table(2, lz, &g.s) == WIRECAT_OK);
}

TEST_CASE("capi induced tables round trip through parse") {
  Guard z2, induced, reparsed;
  REQUIRE(wirecat_fixture("Z2", &z2.s) == WIRECAT_OK);
  REQUIRE(wirecat_induced_nepow(z2.s, &induced.text) == WIRECAT_OK);
  CHECK(std::string(induced.text) == "3\n0 1 2\n1 0 2\n2 2 2\n");
  REQUIRE(wirecat_semigroup_parse(induced.text, &reparsed.s) == WIRECAT_OK);
  CHECK(wirecat_semigroup_order(reparsed.s) == 3);

  Guard product;
  REQUIRE(wirecat_induced_writer(z2.s, z2.s, &product.text) == WIRECAT_OK);
  CHECK(std::string(product.text) == "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
}

TEST_CASE("capi size bound maps to its own status") {
  Guard g;
  REQUIRE(wirecat_fixture("SL2", &g.s) == WIRECAT_OK);
  CHECK(wirecat_karoubi_summary(g.s, 2, &g.text) == WIRECAT_ERROR_SIZE_BOUND);
  CHECK(g.text == nullptr);
}

TEST_CASE("capi enumerate") {
  Guard g;
  REQUIRE(wirecat_enumerate_corpus(1, &g.text) == WIRECAT_OK);
  CHECK(std::string(g.text) == "1\n0\n");
  Guard bad;
  CHECK(wirecat_enumerate_corpus(4, &bad.text) == WIRECAT_ERROR_SIZE_BOUND);
}

TEST_CASE("capi verify at order 1") {
  Guard g;
  CHECK(wirecat_verify("regularity", 1, 0, &g.text) == WIRECAT_OK);
  CHECK(std::string(g.text).find("RESULT PASS") != std::string::npos);
  Guard bad;
  CHECK(wirecat_verify("bogus", 1, 0, &bad.text) == WIRECAT_ERROR_VALIDATION);
}

TEST_CASE("capi constants report") {
  Guard g;
  REQUIRE(wirecat_constants_report_nepow(nullptr, 2, &g.text) == WIRECAT_OK);
  CHECK(std::string(g.text).find("natural families up to size 2: 1") !=
        std::string::npos);
}

TEST_CASE("capi status names") {
  CHECK(std::string(wirecat_status_name(WIRECAT_OK)) == "ok");
  CHECK(std::string(wirecat_status_name(WIRECAT_ERROR_PARSE)) ==
        "parse error");
  CHECK(std::string(wirecat_version()) == "1.0.0");
}
