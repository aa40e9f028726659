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

#ifndef WIRECAT_KAROUBI_HPP_
#define WIRECAT_KAROUBI_HPP_

#include <array>
#include <map>
#include <vector>

#include "wirecat/wired.hpp"

namespace wirecat {

// An arrow e -> f of the Karoubi envelope: e, f idempotent and e*x*f == x
// (so e*x == x and x*f == x, which construction asserts).
struct KaroubiTriple {
  int e = 0;
  int x = 0;
  int f = 0;

  bool operator==(const KaroubiTriple& o) const {
    return e == o.e && x == o.x && f == o.f;
  }
};

// The Karoubi envelope of a semigroup as a wired category: objects are the
// idempotents (ascending), arrows all valid triples in lexicographic
// (e, x, f) order, composition (e,x,f);(f,y,g) = (e,xy,g), identity (e,e,e)
// and wire[e][f] = (e, e*f, f).
struct KaroubiEnvelope {
  FiniteSemigroup source;
  std::vector<int> objects;            // idempotent element per object
  std::vector<KaroubiTriple> triples;  // arrow i = triples[i]
  WiredCategory wired;

  int object_index(int idempotent) const;   // -1 if not an object
  int triple_index(const KaroubiTriple& t) const;  // -1 if not an arrow

 private:
  friend KaroubiEnvelope karoubi_envelope(const FiniteSemigroup&, int);
  std::map<std::array<int, 3>, int> index_;
};

KaroubiEnvelope karoubi_envelope(const FiniteSemigroup& s,
                                 int max_arrows = kDefaultMaxArrows);

// The counit component at s: the middle projection from the semigroup of
// K(s) back onto s.  Throws NotHomomorphismError if it fails to convert
// the wired product to the product of s (never expected).
struct CounitReport {
  WiredSemigroup sk;       // wired_to_semigroup(karoubi_envelope(s))
  std::vector<int> map;    // arrow i  |->  triples[i].x
  bool surjective = false;
};

CounitReport counit(const KaroubiEnvelope& env);

// The unit component at a wired category c: the wired functor
// c -> K(S(c)) sending a to the idempotent 1_a and phi: a->b to the triple
// (1_a, phi, 1_b).  Construction validates all functor laws.
struct UnitResult {
  WiredSemigroup sc;      // S(c)
  KaroubiEnvelope env;    // K(S(c))
  WiredFunctor functor;
};

UnitResult unit(const WiredCategory& c, int max_arrows = kDefaultMaxArrows);

// All semigroup homomorphisms a -> s, as total maps, in lexicographic order.
std::vector<std::vector<int>> enumerate_homomorphisms(const FiniteSemigroup& a,
                                                      const FiniteSemigroup& s);

// All wired functors c -> d, ordered by (object map, arrow map).
std::vector<WiredFunctor> enumerate_wired_functors(const WiredCategory& c,
                                                   const WiredCategory& d);

// The functor K(h): K(a) -> K(s) of a homomorphism h: a -> s, acting on
// triples componentwise.
WiredFunctor karoubi_on_hom(const std::vector<int>& h,
                            const KaroubiEnvelope& from,
                            const KaroubiEnvelope& to);

// Enumerates wired functors c -> K(s) and homomorphisms S(c) -> s and
// checks that middle projection and triple assembly are mutually inverse
// bijections between the two sets.
struct BijectionReport {
  int num_functors = 0;
  int num_homs = 0;
  bool forward_well_defined = false;   // middle(F(-)) is always a hom
  bool backward_well_defined = false;  // assembled triples form a functor
  bool mutually_inverse = false;

  bool ok() const {
    return forward_well_defined && backward_well_defined && mutually_inverse &&
           num_functors == num_homs;
  }
};

BijectionReport adjunction_bijection_check(const WiredCategory& c,
                                           const FiniteSemigroup& s,
                                           int max_c_arrows = 6,
                                           int max_s_order = 3);

// Triangle identities of the adjunction, as an informational pass:
// the counit after S(unit) is the identity on S(c), and K(counit) after
// the unit at K(s) is the identity on K(s).
bool triangle_left(const WiredCategory& c, int max_arrows = kDefaultMaxArrows);
bool triangle_right(const FiniteSemigroup& s,
                    int max_arrows = kDefaultMaxArrows);

// The constructive split epi -- split mono factorization of a Karoubi
// triple through the idempotent y*x, for y a pseudoinverse of the middle.
// Construction checks validity of all four triples and the equations
// epi;mono = t, epi_left_inverse;epi = 1_{yx}, mono;mono_right_inverse =
// 1_{yx}.  Throws NotPseudoinverseError when x*y*x != x.
struct RegularFactorization {
  KaroubiTriple epi, mono, epi_left_inverse, mono_right_inverse;
};

RegularFactorization regular_factorization(const FiniteSemigroup& s,
                                           const KaroubiTriple& t, int y);

// regular(s)  <=>  enough idempotents  and  every arrow of K(s) admits a
// split epi -- split mono factorization.
struct RegularityTheoremReport {
  bool regular = false;
  bool enough_idempotents = false;
  bool all_arrows_factor = false;
  int failing_arrow = -1;  // least non-factorizable arrow, or -1

  bool biconditional_holds() const {
    return regular == (enough_idempotents && all_arrows_factor);
  }
};

RegularityTheoremReport theorem_regular_iff_factorization(
    const FiniteSemigroup& s, int max_arrows = kDefaultMaxArrows);

// Standalone check of the factorization criterion on an arbitrary wired
// category: when every arrow splits as epi;mono, the induced semigroup is
// regular with pseudoinverse mono_right_inverse ; epi_left_inverse.
struct SplitFactRegularReport {
  bool hypothesis = false;   // every arrow factorizes
  bool regular = false;      // is_regular(S(c))
  bool witnesses_ok = false; // the constructive pseudoinverse works
};

SplitFactRegularReport splitfact_regular_check(
    const WiredCategory& c, int max_arrows = kDefaultMaxArrows);

}  // namespace wirecat

#endif  // WIRECAT_KAROUBI_HPP_
