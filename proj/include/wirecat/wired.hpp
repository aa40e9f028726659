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

#ifndef WIRECAT_WIRED_HPP_
#define WIRECAT_WIRED_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wirecat/category.hpp"

namespace wirecat {

// Quadratic arrow tables put a practical cap on category size; callers can
// raise it per call (the CLI wires this to WIRECAT_MAX_ARROWS).
inline constexpr int kDefaultMaxArrows = 512;

// A category with a chosen arrow wire[a][b]: a -> b for every ordered pair
// of objects, the diagonal being the identities.
struct WiredCategory {
  FiniteCategory base;
  std::vector<std::vector<int>> wire;

  int wire_at(int a, int b) const { return wire[a][b]; }
};

// Checks wire endpoints and the identity diagonal on top of
// validate_category.  Throws WireEndpointsError / WireDiagonalError.
WiredCategory validate_wired(WiredCategory raw);

// Exactly one arrow between every ordered pair of objects; arrow index of
// a -> b is a*m + b.
WiredCategory indiscrete_wired(int m);

// One-object wired category of a monoid; the only possible wire is the
// identity.
WiredCategory one_object_wired(const FiniteSemigroup& monoid);

// The semigroup on all arrows with product f (.) g = f ; wire[cod f][dom g]
// ; g.  Element i of the result is arrow i; the product extends composition
// on composable pairs.  The table is re-validated for associativity.
struct WiredSemigroup {
  FiniteSemigroup sgr;
};

WiredSemigroup wired_to_semigroup(const WiredCategory& c,
                                  int max_arrows = kDefaultMaxArrows);

struct WiredFunctor {
  std::vector<int> obj_map;  // objects of C -> objects of D
  std::vector<int> arr_map;  // arrows of C -> arrows of D
};

// Checks endpoint preservation, identities, composition and wires.  Throws
// ValidationError naming the first broken law.
void validate_wired_functor(const WiredCategory& c, const WiredCategory& d,
                            const WiredFunctor& f);

// The arrow map of a validated wired functor, checked to be a semigroup
// homomorphism wired_to_semigroup(c) -> wired_to_semigroup(d).  Throws
// NotHomomorphismError if some pair fails (possible only when the functor
// invariants were violated upstream).
std::vector<int> s_on_functor(const WiredCategory& c, const WiredCategory& d,
                              const WiredFunctor& f);

// split_epi_witness[f] = least f' with f';f an identity (f: a->b needs
// f': b->a and f';f = 1_b), or -1.  split_mono_witness[f] = least f' with
// f;f' = 1_{dom f}, or -1.
std::vector<int> split_epi_witness(const FiniteCategory& c);
std::vector<int> split_mono_witness(const FiniteCategory& c);

struct SplitFactorization {
  int epi = -1;
  int mono = -1;
  int epi_left_inverse = -1;
  int mono_right_inverse = -1;
};

// Exhaustive search for phi = epi ; mono with a split epi and a split mono,
// in lexicographic (epi, mono) order.  nullopt when no factorization exists.
std::optional<SplitFactorization> factorize_split(const FiniteCategory& c,
                                                  int phi);

// The principal identifier relation, defined by commutativity of the
// eight-node wire-interleaving diagram: every pair of directed paths
// between the same two nodes must compose equally.
std::vector<std::vector<bool>> theta(const WiredCategory& c);

// The same relation computed from the four generating equations
//   alpha;w_xy = w_ab;beta       beta;w_yx = w_ba;alpha
//   w_ab;w_ba;alpha = alpha      w_ba;w_ab;beta = beta
// Kept as an independent route; theta_properties compares the two.
std::vector<std::vector<bool>> theta_by_equations(const WiredCategory& c);

struct ThetaReport {
  bool reflexive = false;
  bool symmetric = false;
  bool parallel_collapse = false;  // related parallel arrows are equal
  bool equations_agree = false;    // path route == equation route
  long long related_pairs = 0;
  std::vector<std::array<int, 3>> transitivity_counterexamples;
};

ThetaReport theta_properties(const WiredCategory& c);

// JSON export: objects, named arrows with endpoints, identities, the wire
// grid and all defined composition triples, with stable key order.
std::string wired_to_json(const WiredCategory& c,
                          const std::vector<std::string>& object_names,
                          const std::vector<std::string>& arrow_names);
std::string wired_to_json(const WiredCategory& c);

}  // namespace wirecat

#endif  // WIRECAT_WIRED_HPP_
