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

#ifndef WIRECAT_SEMIGROUP_HPP_
#define WIRECAT_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wirecat {

// A finite semigroup on elements 0..n-1 given by its Cayley table.
// Values of this type always satisfy associativity: the only way to build
// one is validate_semigroup (or the constructions below, which feed their
// tables through it).
struct FiniteSemigroup {
  int n = 0;
  std::vector<int> table;  // row-major, table[x * n + y] = x * y

  int at(int x, int y) const { return table[x * n + y]; }

  // Product of three elements; well-defined by associativity.
  int at(int x, int y, int z) const { return at(at(x, y), z); }

  bool operator==(const FiniteSemigroup& other) const {
    return n == other.n && table == other.table;
  }
};

// Checks that the grid is a Cayley table of a semigroup.  Throws
// OutOfRangeError for a stray entry and NotAssociativeError with the first
// violating triple in lexicographic (x, y, z) order.
FiniteSemigroup validate_semigroup(int n, std::vector<int> table);

// Elements e with e*e == e, ascending.
std::vector<int> idempotents(const FiniteSemigroup& s);

// All y with x*y*x == x, ascending (possibly empty).
std::vector<int> pseudoinverses(const FiniteSemigroup& s, int x);

struct RegularityReport {
  bool regular = false;
  // witness[x] = least pseudoinverse of x, or -1 when x has none.
  std::vector<int> witness;
  // least x without a pseudoinverse, or -1.
  int counterexample = -1;
};

RegularityReport is_regular(const FiniteSemigroup& s);

struct EnoughIdempotentsReport {
  bool enough = false;
  // witness[x] = lexicographically least idempotent pair (e, f) with
  // e*x*f == x, or (-1, -1).
  std::vector<std::pair<int, int>> witness;
  int counterexample = -1;
};

EnoughIdempotentsReport has_enough_idempotents(const FiniteSemigroup& s);

// The semigroup of nonempty subsets of s under the setwise product
// {a*b : a in A, b in B}.  Subset with bitmask m (1 <= m < 2^n) is the
// element with index m-1.  Throws SizeBoundError for s.n > max_order.
struct PowerSemigroup {
  FiniteSemigroup sgr;
  std::vector<int> singleton;  // singleton[a] = index of {a}
};

PowerSemigroup power_semigroup(const FiniteSemigroup& s, int max_order = 6);

// Direct product on pairs (a, b) with index a * t.n + b.
FiniteSemigroup direct_product(const FiniteSemigroup& s,
                               const FiniteSemigroup& t);

// Two-sided identity element, if one exists.
std::optional<int> identity_element(const FiniteSemigroup& s);

}  // namespace wirecat

#endif  // WIRECAT_SEMIGROUP_HPP_
