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

#include "wirecat/ordered.hpp"

#include <algorithm>
#include <string>

#include "wirecat/errors.hpp"

namespace wirecat {

OrderedSemigroup make_ordered(FiniteSemigroup base, std::vector<uint8_t> leq) {
  int n = base.n;
  if (static_cast<int>(leq.size()) != n * n) {
    throw ValidationError("order relation has wrong size");
  }
  for (int x = 0; x < n; ++x) {
    if (!leq[x * n + x]) {
      throw ValidationError("order not reflexive at " + std::to_string(x));
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && leq[x * n + y] && leq[y * n + x]) {
        throw ValidationError("order not antisymmetric at (" +
                              std::to_string(x) + "," + std::to_string(y) +
                              ")");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!leq[x * n + y]) {
        continue;
      }
      for (int z = 0; z < n; ++z) {
        if (leq[y * n + z] && !leq[x * n + z]) {
          throw ValidationError("order not transitive at (" +
                                std::to_string(x) + "," + std::to_string(y) +
                                "," + std::to_string(z) + ")");
        }
      }
    }
  }
  OrderedSemigroup t;
  t.base = std::move(base);
  t.leq = std::move(leq);
  return t;
}

bool is_order_compatible(const OrderedSemigroup& t) {
  int n = t.base.n;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!t.le(x, y)) {
        continue;
      }
      for (int z = 0; z < n; ++z) {
        if (!t.le(t.base.at(x, z), t.base.at(y, z)) ||
            !t.le(t.base.at(z, x), t.base.at(z, y))) {
          return false;
        }
      }
    }
  }
  return true;
}

RectBand rect_band_on_subset_pairs(const std::vector<int>& idempotent_elements,
                                   int max_idempotents) {
  int bits = static_cast<int>(idempotent_elements.size());
  if (bits > max_idempotents || bits > 6) {
    throw SizeBoundError("rect band bound: " + std::to_string(bits) +
                         " idempotents exceed " +
                         std::to_string(std::min(max_idempotents, 6)));
  }
  int subsets = 1 << bits;
  int n = subsets * subsets;  // pairs (A, B), index A * subsets + B
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    int a = i / subsets;
    for (int j = 0; j < n; ++j) {
      int d = j % subsets;
      table[static_cast<size_t>(i) * n + j] = a * subsets + d;
    }
  }
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    int a = i / subsets, b = i % subsets;
    for (int j = 0; j < n; ++j) {
      int c = j / subsets, d = j % subsets;
      leq[static_cast<size_t>(i) * n + j] =
          (a & c) == a && (b & d) == b;  // componentwise inclusion
    }
  }
  RectBand band;
  band.ord = make_ordered(validate_semigroup(n, std::move(table)),
                          std::move(leq));
  band.idempotent_elements = idempotent_elements;
  return band;
}

std::vector<SubsetPair> support_lax_morphism(const FiniteSemigroup& s) {
  std::vector<int> idem = idempotents(s);
  if (idem.size() > 32) {
    throw SizeBoundError("subset-pair masks support at most 32 idempotents");
  }
  std::vector<SubsetPair> result(s.n);
  for (int x = 0; x < s.n; ++x) {
    SubsetPair p;
    for (size_t i = 0; i < idem.size(); ++i) {
      if (s.at(idem[i], x) == x) {
        p.left |= 1u << i;
      }
      if (s.at(x, idem[i]) == x) {
        p.right |= 1u << i;
      }
    }
    result[x] = p;
  }
  return result;
}

std::optional<LaxViolation> check_lax_morphism(const std::vector<int>& f,
                                               const FiniteSemigroup& s,
                                               const OrderedSemigroup& t) {
  if (static_cast<int>(f.size()) != s.n) {
    throw ShapeMismatchError("lax morphism map must be total on the domain");
  }
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y) {
      if (!t.le(t.base.at(f[x], f[y]), f[s.at(x, y)])) {
        return LaxViolation{x, y};
      }
    }
  }
  return std::nullopt;
}

std::vector<int> support_map_into_rect_band(const FiniteSemigroup& s,
                                            const RectBand& band) {
  std::vector<SubsetPair> pairs = support_lax_morphism(s);
  std::vector<int> map(s.n);
  for (int x = 0; x < s.n; ++x) {
    map[x] = band.index(pairs[x]);
  }
  return map;
}

}  // namespace wirecat
