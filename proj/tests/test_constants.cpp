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

#include <doctest.h>

#include "wirecat/corpus.hpp"
#include "wirecat/semigroupad.hpp"

using namespace wirecat;

TEST_CASE("natural families of a writer are the constant sections") {
  auto t = writer_semigroupad(fixture("Z2"));
  std::vector<NatFamily> families = enumerate_nat_families(*t, 3);
  REQUIRE(families.size() == 2);
  for (size_t c = 0; c < families.size(); ++c) {
    const NatFamily& xi = families[c];
    CHECK(xi.component[0].table.empty());
    for (int k = 1; k <= 3; ++k) {
      for (int a = 0; a < k; ++a) {
        CHECK(xi.component[k].table[a] == a * 2 + static_cast<int>(c));
      }
    }
  }
}

TEST_CASE("the only natural family of nepow is the singleton") {
  auto t = nepow_semigroupad();
  std::vector<NatFamily> families = enumerate_nat_families(*t, 3);
  REQUIRE(families.size() == 1);
  for (int k = 1; k <= 3; ++k) {
    for (int a = 0; a < k; ++a) {
      CHECK(families[0].component[k].table[a] == (1 << a) - 1);
    }
  }
}

TEST_CASE("nat_component extends by naturality along points") {
  auto t = writer_semigroupad(fixture("Z2"));
  NatFamily xi = enumerate_nat_families(*t, 3)[1];  // a |-> (a, 1)
  FinFunction at5 = nat_component(*t, xi, 5);
  CHECK(at5.dom == 5);
  CHECK(at5.cod == 10);
  for (int a = 0; a < 5; ++a) {
    CHECK(at5.table[a] == a * 2 + 1);
  }
  // Bounded components are returned as stored.
  CHECK(nat_component(*t, xi, 2) == xi.component[2]);
}

TEST_CASE("constant classification of writer families") {
  // In Z2, 0 is the identity: its section is everything.  1 is central but
  // neither an identity nor idempotent.
  auto z2 = writer_semigroupad(fixture("Z2"));
  std::vector<NatFamily> families = enumerate_nat_families(*z2, 3);
  ConstantClassReport zero = constant_class(*z2, families[0], 3);
  CHECK(zero.ok());
  CHECK(zero.mu_form.left);
  CHECK(zero.mu_form.right);
  CHECK(zero.mu_form.central);
  CHECK(zero.mu_form.idempotent);

  ConstantClassReport one = constant_class(*z2, families[1], 3);
  CHECK(one.ok());
  CHECK_FALSE(one.mu_form.left);
  CHECK_FALSE(one.mu_form.right);
  CHECK(one.mu_form.central);
  CHECK_FALSE(one.mu_form.idempotent);

  // In a left-zero semigroup every element is a right identity and
  // idempotent, never a left identity, and not central.
  auto lz = writer_semigroupad(fixture("LZ2"));
  for (const NatFamily& xi : enumerate_nat_families(*lz, 3)) {
    ConstantClassReport cls = constant_class(*lz, xi, 3);
    CHECK(cls.ok());
    CHECK_FALSE(cls.mu_form.left);
    CHECK(cls.mu_form.right);
    CHECK_FALSE(cls.mu_form.central);
    CHECK(cls.mu_form.idempotent);
  }
}

TEST_CASE("the nepow singleton is a two-sided identity constant") {
  auto t = nepow_semigroupad();
  NatFamily xi = enumerate_nat_families(*t, 3)[0];
  ConstantClassReport cls = constant_class(*t, xi, 3);
  CHECK(cls.ok());
  CHECK(cls.mu_form.left);
  CHECK(cls.mu_form.right);
  CHECK(cls.mu_form.central);
  CHECK(cls.mu_form.idempotent);
  CHECK(cls.note_holds);
}

TEST_CASE("transfer into the power semigroup of a monoid") {
  auto t = nepow_semigroupad();
  NatFamily xi = enumerate_nat_families(*t, 3)[0];
  for (const char* name : {"SL2", "Z2"}) {
    FiniteSemigroup s = fixture(name);
    int e = *identity_element(s);
    TransferReport tr = constants_transfer_check(*t, xi, s, e, 3);
    CHECK(tr.e_image == (1 << e) - 1);  // the singleton {e}
    CHECK(tr.left.hypothesis);
    CHECK(tr.right.hypothesis);
    CHECK(tr.central.hypothesis);
    CHECK(tr.idempotent.hypothesis);
    CHECK(tr.ok());
    // {e} really is a two-sided identity of the power semigroup.
    CHECK(tr.left.conclusion);
    CHECK(tr.right.conclusion);
  }
}

TEST_CASE("transfer with a writer matches the product structure") {
  auto t = writer_semigroupad(fixture("Z2"));
  NatFamily xi_zero = enumerate_nat_families(*t, 3)[0];
  FiniteSemigroup z2 = fixture("Z2");
  TransferReport tr = constants_transfer_check(*t, xi_zero, z2, 0, 3);
  CHECK(tr.e_image == 0);  // (0, 0)
  CHECK(tr.ok());
  CHECK(tr.left.hypothesis);
  CHECK(tr.left.conclusion);
  CHECK(tr.right.conclusion);
  CHECK(tr.idempotent.conclusion);
}

TEST_CASE("vacuous transfer hypotheses are recorded as vacuous") {
  auto t = writer_semigroupad(fixture("Z2"));
  NatFamily xi_one = enumerate_nat_families(*t, 3)[1];  // not an identity
  FiniteSemigroup z2 = fixture("Z2");
  TransferReport tr = constants_transfer_check(*t, xi_one, z2, 0, 3);
  CHECK_FALSE(tr.left.hypothesis);
  CHECK_FALSE(tr.right.hypothesis);
  CHECK(tr.central.hypothesis);  // 1 is central in Z2 and xi is central
  CHECK(tr.ok());
}

TEST_CASE("idempotent transfer on a left-zero writer") {
  auto t = writer_semigroupad(fixture("LZ2"));
  NatFamily xi = enumerate_nat_families(*t, 3)[0];  // c = 0, idempotent
  FiniteSemigroup lz = fixture("LZ2");
  TransferReport tr = constants_transfer_check(*t, xi, lz, 0, 3);
  CHECK(tr.idempotent.hypothesis);
  CHECK(tr.idempotent.conclusion);
  CHECK(tr.right.hypothesis);  // right/right holds in left-zero
  CHECK(tr.right.conclusion);
  CHECK(tr.ok());
}
