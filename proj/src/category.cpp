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

#include <string>

#include "wirecat/errors.hpp"

namespace wirecat {

int FiniteCategory::compose_path(std::span<const int> path) const {
  int acc = path[0];
  for (size_t i = 1; i < path.size(); ++i) {
    acc = compose(acc, path[i]);
  }
  return acc;
}

FiniteCategory validate_category(FiniteCategory raw) {
  int m = raw.num_objects;
  int k = raw.num_arrows();
  if (m < 0) {
    throw ValidationError("negative object count");
  }
  if (static_cast<int>(raw.identity.size()) != m) {
    throw ValidationError("identity list must have one entry per object");
  }
  for (const Arrow& a : raw.arrows) {
    if (a.dom < 0 || a.dom >= m || a.cod < 0 || a.cod >= m) {
      throw ValidationError("arrow endpoint outside object range");
    }
  }
  if (static_cast<int>(raw.comp.size()) != k) {
    throw ValidationError("composition table must have one row per arrow");
  }
  for (const auto& row : raw.comp) {
    if (static_cast<int>(row.size()) != k) {
      throw ValidationError("composition table row has wrong length");
    }
  }

  // comp[f][g] defined iff cod(f) == dom(g), with matching endpoints.
  for (int f = 0; f < k; ++f) {
    for (int g = 0; g < k; ++g) {
      int fg = raw.comp[f][g];
      if (!raw.composable(f, g)) {
        if (fg != -1) {
          throw BadCompositeError(f, g, "defined on a non-composable pair");
        }
        continue;
      }
      if (fg < 0 || fg >= k) {
        throw BadCompositeError(f, g, "composite index out of range");
      }
      if (raw.dom(fg) != raw.dom(f) || raw.cod(fg) != raw.cod(g)) {
        throw BadCompositeError(f, g, "composite has wrong endpoints");
      }
    }
  }

  for (int a = 0; a < m; ++a) {
    int id = raw.identity[a];
    if (id < 0 || id >= k || raw.dom(id) != a || raw.cod(id) != a) {
      throw BadIdentityError(a, "identity arrow has wrong endpoints");
    }
  }
  for (int a = 0; a < m; ++a) {
    int id = raw.identity[a];
    for (int f = 0; f < k; ++f) {
      if (raw.dom(f) == a && raw.comp[id][f] != f) {
        throw BadIdentityError(a, "1;f != f for arrow " + std::to_string(f));
      }
      if (raw.cod(f) == a && raw.comp[f][id] != f) {
        throw BadIdentityError(a, "f;1 != f for arrow " + std::to_string(f));
      }
    }
  }

  for (int f = 0; f < k; ++f) {
    for (int g = 0; g < k; ++g) {
      if (!raw.composable(f, g)) {
        continue;
      }
      int fg = raw.comp[f][g];
      for (int h = 0; h < k; ++h) {
        if (!raw.composable(g, h)) {
          continue;
        }
        if (raw.comp[fg][h] != raw.comp[f][raw.comp[g][h]]) {
          throw NotAssociativeError(f, g, h);
        }
      }
    }
  }
  return raw;
}

FiniteCategory one_object_category(const FiniteSemigroup& monoid) {
  std::optional<int> e = identity_element(monoid);
  if (!e) {
    throw ValidationError("one-object category needs an identity element");
  }
  FiniteCategory c;
  c.num_objects = 1;
  c.arrows.assign(monoid.n, Arrow{0, 0});
  c.identity = {*e};
  c.comp.assign(monoid.n, std::vector<int>(monoid.n, -1));
  for (int x = 0; x < monoid.n; ++x) {
    for (int y = 0; y < monoid.n; ++y) {
      c.comp[x][y] = monoid.at(x, y);
    }
  }
  return validate_category(std::move(c));
}

}  // namespace wirecat
