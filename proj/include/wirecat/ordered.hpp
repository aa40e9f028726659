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

#ifndef WIRECAT_ORDERED_HPP_
#define WIRECAT_ORDERED_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "wirecat/semigroup.hpp"

namespace wirecat {

// A semigroup together with a partial order on its elements.  The order is
// not required to be compatible with the multiplication; see
// is_order_compatible for the informational check.
struct OrderedSemigroup {
  FiniteSemigroup base;
  std::vector<uint8_t> leq;  // leq[x * n + y] != 0  iff  x <= y

  bool le(int x, int y) const { return leq[x * base.n + y] != 0; }
};

// Validates reflexivity, antisymmetry and transitivity of leq.
OrderedSemigroup make_ordered(FiniteSemigroup base, std::vector<uint8_t> leq);

// Whether x <= y implies x*z <= y*z and z*x <= z*y for all z.
bool is_order_compatible(const OrderedSemigroup& t);

// A pair of subsets of the idempotent set of a reference semigroup, stored
// as bitmasks over positions in the ascending idempotent list.
struct SubsetPair {
  uint32_t left = 0;
  uint32_t right = 0;

  bool operator==(const SubsetPair& other) const {
    return left == other.left && right == other.right;
  }
};

// The rectangular band on pairs of subsets of the idempotent set E:
// (A,B)*(C,D) = (A,D), ordered by componentwise inclusion.  Pair (A,B) has
// element index A * 2^|E| + B.  Throws SizeBoundError when |E| exceeds
// max_idempotents.
struct RectBand {
  OrderedSemigroup ord;
  std::vector<int> idempotent_elements;  // bit positions refer to this list

  int index(SubsetPair p) const {
    return static_cast<int>(p.left) *
               (1 << idempotent_elements.size()) +
           static_cast<int>(p.right);
  }
  SubsetPair decode(int element) const {
    int bits = static_cast<int>(idempotent_elements.size());
    return {static_cast<uint32_t>(element >> bits),
            static_cast<uint32_t>(element & ((1 << bits) - 1))};
  }
};

RectBand rect_band_on_subset_pairs(const std::vector<int>& idempotent_elements,
                                   int max_idempotents = 5);

// x  |->  ({e in E : ex = x}, {e in E : xe = x}) as bitmasks over positions
// in idempotents(s).
std::vector<SubsetPair> support_lax_morphism(const FiniteSemigroup& s);

struct LaxViolation {
  int x;
  int y;
};

// Checks f(x)*f(y) <= f(x*y) for all pairs; returns the first violation in
// lexicographic (x, y) order, or nullopt when f is a lax morphism.
std::optional<LaxViolation> check_lax_morphism(const std::vector<int>& f,
                                               const FiniteSemigroup& s,
                                               const OrderedSemigroup& t);

// The support map as element indices of the rect band built on
// idempotents(s), ready for check_lax_morphism.
std::vector<int> support_map_into_rect_band(const FiniteSemigroup& s,
                                            const RectBand& band);

}  // namespace wirecat

#endif  // WIRECAT_ORDERED_HPP_
