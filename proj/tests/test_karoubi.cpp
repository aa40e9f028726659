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

#include "wirecat/karoubi.hpp"

#include <doctest.h>

#include "wirecat/corpus.hpp"
#include "wirecat/errors.hpp"

using namespace wirecat;

TEST_CASE("karoubi envelope of SL2") {
  KaroubiEnvelope env = karoubi_envelope(fixture("SL2"));
  CHECK(env.objects == std::vector<int>{0, 1});
  std::vector<KaroubiTriple> expected = {
      {0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 1}};
  CHECK(env.triples == expected);
  CHECK(env.wired.wire_at(0, 1) == env.triple_index({0, 0, 1}));
  CHECK(env.wired.wire_at(1, 0) == env.triple_index({1, 0, 0}));
}

TEST_CASE("karoubi envelope of Z2 is Z2 at its only object") {
  KaroubiEnvelope env = karoubi_envelope(fixture("Z2"));
  CHECK(env.objects == std::vector<int>{0});
  CHECK(env.triples.size() == 2);
  // (0,1,0);(0,1,0) = (0,0,0).
  int t = env.triple_index({0, 1, 0});
  CHECK(env.wired.base.compose(t, t) == env.triple_index({0, 0, 0}));
  CHECK(wired_to_semigroup(env.wired).sgr == fixture("Z2"));
}

TEST_CASE("karoubi envelope of NULL2 is trivial") {
  KaroubiEnvelope env = karoubi_envelope(fixture("NULL2"));
  CHECK(env.objects == std::vector<int>{0});
  CHECK(env.triples.size() == 1);
}

TEST_CASE("karoubi envelope respects the arrow bound") {
  CHECK_THROWS_AS(karoubi_envelope(fixture("SL2"), 4), SizeBoundError);
}

TEST_CASE("counit is the middle projection and detects enough idempotents") {
  for (const auto& [name, s] : fixtures()) {
    KaroubiEnvelope env = karoubi_envelope(s);
    CounitReport report = counit(env);  // throws if not a homomorphism
    for (size_t i = 0; i < env.triples.size(); ++i) {
      CHECK(report.map[i] == env.triples[i].x);
    }
    CHECK(report.surjective == has_enough_idempotents(s).enough);
  }
  CHECK(counit(karoubi_envelope(fixture("Z2"))).surjective);
  CHECK_FALSE(counit(karoubi_envelope(fixture("NULL2"))).surjective);
}

TEST_CASE("box product on triples multiplies middles across the wire") {
  for (const char* name : {"SL2", "RB22", "T2"}) {
    FiniteSemigroup s = fixture(name);
    KaroubiEnvelope env = karoubi_envelope(s);
    FiniteSemigroup sk = wired_to_semigroup(env.wired).sgr;
    for (size_t i = 0; i < env.triples.size(); ++i) {
      for (size_t j = 0; j < env.triples.size(); ++j) {
        const KaroubiTriple& a = env.triples[i];
        const KaroubiTriple& b = env.triples[j];
        int product = sk.at(static_cast<int>(i), static_cast<int>(j));
        CHECK(product ==
              env.triple_index({a.e, s.at(s.at(a.x, b.e), b.x), b.f}));
        CHECK(product == env.triple_index({a.e, s.at(a.x, b.x), b.f}));
      }
    }
  }
}

TEST_CASE("unit embeds a monoid as triples at its identity") {
  WiredCategory c = one_object_wired(fixture("Z2"));
  UnitResult u = unit(c);
  CHECK(u.sc.sgr == fixture("Z2"));
  // The identity arrow of the single object is element 0 of S(C).
  CHECK(u.functor.obj_map == std::vector<int>{u.env.object_index(0)});
  for (int x = 0; x < 2; ++x) {
    CHECK(u.functor.arr_map[x] == u.env.triple_index({0, x, 0}));
  }
}

TEST_CASE("unit maps wires to wires explicitly") {
  WiredCategory c = indiscrete_wired(2);
  UnitResult u = unit(c);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      int image = u.functor.arr_map[c.wire_at(a, b)];
      CHECK(image ==
            u.env.wired.wire_at(u.functor.obj_map[a], u.functor.obj_map[b]));
    }
  }
}

TEST_CASE("unit validates on the karoubi envelopes themselves") {
  for (const char* name : {"LZ2", "NULL2", "SL2", "Z2", "RB22", "T2"}) {
    WiredCategory c = karoubi_envelope(fixture(name)).wired;
    CHECK_NOTHROW(unit(c, 4096));
  }
}

TEST_CASE("hom enumeration: trivial source counts idempotents") {
  FiniteSemigroup trivial = validate_semigroup(1, {0});
  CHECK(enumerate_homomorphisms(trivial, fixture("Z2")).size() == 1);
  CHECK(enumerate_homomorphisms(trivial, fixture("SL2")).size() == 2);
  CHECK(enumerate_homomorphisms(trivial, fixture("RB22")).size() == 4);
}

TEST_CASE("adjunction bijection on the trivial one-object category") {
  FiniteSemigroup trivial = validate_semigroup(1, {0});
  BijectionReport report =
      adjunction_bijection_check(one_object_wired(trivial), fixture("Z2"));
  CHECK(report.num_functors == 1);
  CHECK(report.num_homs == 1);
  CHECK(report.ok());
}

TEST_CASE("adjunction bijection on indiscrete(2) into SL2") {
  // By hand: a homomorphism RB22 -> SL2 forces h(0)=h(2), h(1)=h(3) and
  // then both values equal, so only the two constant maps survive.  On
  // the functor side only the constant object maps satisfy
  // min(o_a, o_b, o_c) = min(o_a, o_c).
  BijectionReport report =
      adjunction_bijection_check(indiscrete_wired(2), fixture("SL2"));
  CHECK(report.ok());
  CHECK(report.num_functors == 2);
  CHECK(report.num_homs == 2);
}

TEST_CASE("adjunction bijection respects its enumeration bounds") {
  CHECK_THROWS_AS(
      adjunction_bijection_check(indiscrete_wired(3), fixture("SL2")),
      SizeBoundError);
}

TEST_CASE("the counit is the image of the identity functor") {
  FiniteSemigroup s = fixture("SL2");
  KaroubiEnvelope env = karoubi_envelope(s);
  CounitReport cou = counit(env);
  // middle o identity == the counit map.
  for (size_t t = 0; t < env.triples.size(); ++t) {
    CHECK(cou.map[t] == env.triples[t].x);
  }
}

TEST_CASE("triangle identities hold on fixtures") {
  CHECK(triangle_left(one_object_wired(fixture("Z2"))));
  CHECK(triangle_left(indiscrete_wired(2)));
  CHECK(triangle_left(karoubi_envelope(fixture("SL2")).wired, 4096));
  for (const char* name : {"LZ2", "NULL2", "SL2", "Z2", "T2"}) {
    CHECK(triangle_right(fixture(name), 4096));
  }
}

TEST_CASE("regular factorization of an identity triple is trivial") {
  FiniteSemigroup z2 = fixture("Z2");
  RegularFactorization fact =
      regular_factorization(z2, KaroubiTriple{0, 0, 0}, 0);
  CHECK(fact.epi == KaroubiTriple{0, 0, 0});
  CHECK(fact.mono == KaroubiTriple{0, 0, 0});
  CHECK(fact.epi_left_inverse == KaroubiTriple{0, 0, 0});
  CHECK(fact.mono_right_inverse == KaroubiTriple{0, 0, 0});
}

TEST_CASE("regular factorization equations across regular fixtures") {
  for (const char* name : {"LZ2", "SL2", "Z2", "RB22", "T2"}) {
    FiniteSemigroup s = fixture(name);
    KaroubiEnvelope env = karoubi_envelope(s);
    for (const KaroubiTriple& t : env.triples) {
      for (int y : pseudoinverses(s, t.x)) {
        CHECK_NOTHROW(regular_factorization(s, t, y));
      }
    }
  }
}

TEST_CASE("regular factorization rejects non-pseudoinverses") {
  CHECK_THROWS_AS(
      regular_factorization(fixture("Z2"), KaroubiTriple{0, 1, 0}, 0),
      NotPseudoinverseError);
}

TEST_CASE("regularity theorem on fixtures") {
  RegularityTheoremReport z2 = theorem_regular_iff_factorization(fixture("Z2"));
  CHECK(z2.regular);
  CHECK(z2.enough_idempotents);
  CHECK(z2.all_arrows_factor);
  CHECK(z2.biconditional_holds());

  RegularityTheoremReport nul =
      theorem_regular_iff_factorization(fixture("NULL2"));
  CHECK_FALSE(nul.regular);
  CHECK_FALSE(nul.enough_idempotents);
  CHECK(nul.biconditional_holds());
}

TEST_CASE("a non-regular monoid leaves some arrow unfactorizable") {
  // 0 absorbing, 1 nilpotent (1*1 = 0), 2 the identity.  Not regular, but
  // as a monoid it has enough idempotents, so the factorization half of
  // the biconditional must be the one that fails.
  FiniteSemigroup nil = validate_semigroup(3, {0, 0, 0,    //
                                               0, 0, 1,    //
                                               0, 1, 2});
  CHECK_FALSE(is_regular(nil).regular);
  CHECK(has_enough_idempotents(nil).enough);

  KaroubiEnvelope env = karoubi_envelope(nil);
  CHECK(env.objects == std::vector<int>{0, 2});
  int nilpotent_arrow = env.triple_index({2, 1, 2});
  REQUIRE(nilpotent_arrow != -1);
  CHECK_FALSE(factorize_split(env.wired.base, nilpotent_arrow).has_value());

  RegularityTheoremReport report = theorem_regular_iff_factorization(nil);
  CHECK_FALSE(report.regular);
  CHECK(report.enough_idempotents);
  CHECK_FALSE(report.all_arrows_factor);
  CHECK(report.failing_arrow != -1);
  CHECK(report.biconditional_holds());
}

TEST_CASE("split factorization criterion standalone") {
  SplitFactRegularReport ind2 = splitfact_regular_check(indiscrete_wired(2));
  CHECK(ind2.hypothesis);
  CHECK(ind2.regular);
  CHECK(ind2.witnesses_ok);

  SplitFactRegularReport kz2 =
      splitfact_regular_check(karoubi_envelope(fixture("Z2")).wired);
  CHECK(kz2.hypothesis);
  CHECK(kz2.regular);
  CHECK(kz2.witnesses_ok);
}
