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

#ifndef WIRECAT_CORPUS_HPP_
#define WIRECAT_CORPUS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "wirecat/semigroup.hpp"

namespace wirecat {

// All labeled associative tables of a given order, in lexicographic order
// of the flattened table (hence duplicate-free and byte-sorted).
struct Corpus {
  int order = 0;
  std::vector<FiniteSemigroup> tables;
};

// order <= 3; order 4 would mean 4^16 candidates and is refused.
Corpus enumerate_semigroups(int order);

// Independent second pass: scans candidate tables in reversed digit order
// and tests associativity with reversed loops.  Counts must agree with
// enumerate_semigroups().tables.size().
long long count_associative_reversed(int order);

// Named fixtures, in stable order:
//   LZ2  left-zero on 2 elements        NULL2 zero product on 2 elements
//   SL2  min-semilattice on {0,1}       Z2    addition mod 2
//   RB22 2x2 rectangular band           T2    all maps on 2 points
std::vector<std::pair<std::string, FiniteSemigroup>> fixtures();

// Throws ValidationError for an unknown name.
FiniteSemigroup fixture(const std::string& name);

// Concatenation of Cayley table files separated by `---` lines.
std::string corpus_export(const Corpus& corpus);

}  // namespace wirecat

#endif  // WIRECAT_CORPUS_HPP_
