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

#include "wirecat/category.hpp"

#include <doctest.h>

#include "wirecat/corpus.hpp"
#include "wirecat/errors.hpp"

using namespace wirecat;

TEST_CASE("one-object category of a monoid") {
  FiniteCategory c = one_object_category(fixture("T2"));
  CHECK(c.num_objects == 1);
  CHECK(c.num_arrows() == 4);
  CHECK(c.identity[0] == 1);
  CHECK(c.compose(2, 2) == 1);  // swap twice
  int path[] = {2, 2, 2};
  CHECK(c.compose_path(path) == 2);
}

TEST_CASE("one-object category needs an identity") {
  CHECK_THROWS_AS(one_object_category(fixture("LZ2")), ValidationError);
}

TEST_CASE("validate_category catches broken identities") {
  // One object, arrows {id, t} with t*t = t, but identity claimed to be t.
  FiniteCategory c;
  c.num_objects = 1;
  c.arrows = {{0, 0}, {0, 0}};
  c.identity = {1};
  c.comp = {{0, 1}, {1, 1}};
  try {
    validate_category(c);
    FAIL("expected BadIdentityError");
  } catch (const BadIdentityError& e) {
    CHECK(e.object == 0);
  }
}

TEST_CASE("validate_category catches composites on non-composable pairs") {
  // Two objects, only identities, but comp claims 0;1 exists.
  FiniteCategory c;
  c.num_objects = 2;
  c.arrows = {{0, 0}, {1, 1}};
  c.identity = {0, 1};
  c.comp = {{0, 0}, {-1, 1}};
  try {
    validate_category(c);
    FAIL("expected BadCompositeError");
  } catch (const BadCompositeError& e) {
    CHECK(e.first == 0);
    CHECK(e.second == 1);
  }
}

TEST_CASE("validate_category catches non-associative composition") {
  // One object, underlying non-associative table {1,0,0,0} padded with an
  // identity element 2.
  FiniteCategory c;
  c.num_objects = 1;
  c.arrows = {{0, 0}, {0, 0}, {0, 0}};
  c.identity = {2};
  c.comp = {{1, 0, 0}, {0, 0, 1}, {0, 1, 2}};
  CHECK_THROWS_AS(validate_category(c), NotAssociativeError);
}
