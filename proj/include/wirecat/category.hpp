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

#ifndef WIRECAT_CATEGORY_HPP_
#define WIRECAT_CATEGORY_HPP_

#include <span>
#include <vector>

#include "wirecat/semigroup.hpp"

namespace wirecat {

// Composition is written diagrammatically throughout: compose(f, g) is
// "apply f, then g" and is defined exactly when cod(f) == dom(g).

struct Arrow {
  int dom = 0;
  int cod = 0;
};

struct FiniteCategory {
  int num_objects = 0;
  std::vector<Arrow> arrows;
  std::vector<int> identity;           // identity[a]: the arrow 1_a
  std::vector<std::vector<int>> comp;  // comp[f][g] = f;g, -1 if undefined

  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int dom(int f) const { return arrows[f].dom; }
  int cod(int f) const { return arrows[f].cod; }
  bool composable(int f, int g) const { return cod(f) == dom(g); }
  int compose(int f, int g) const { return comp[f][g]; }

  // Fold of compose over a nonempty path of consecutive arrows.
  int compose_path(std::span<const int> path) const;
};

// Checks identity, composability and associativity laws; reports the first
// violation via BadIdentityError, BadCompositeError or NotAssociativeError
// (the latter carrying arrow indices).
FiniteCategory validate_category(FiniteCategory raw);

// The one-object category whose arrows are the elements of a monoid.
// Throws ValidationError when the semigroup has no identity element.
FiniteCategory one_object_category(const FiniteSemigroup& monoid);

}  // namespace wirecat

#endif  // WIRECAT_CATEGORY_HPP_
