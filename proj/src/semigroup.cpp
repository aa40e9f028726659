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

#include "wirecat/semigroup.hpp"

#include <algorithm>
#include <string>

#include "wirecat/errors.hpp"

namespace wirecat {

FiniteSemigroup validate_semigroup(int n, std::vector<int> table) {
  if (n < 1) {
    throw ValidationError("semigroup order must be >= 1, got " +
                          std::to_string(n));
  }
  if (static_cast<int>(table.size()) != n * n) {
    throw ValidationError("table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(n * n));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int v = table[x * n + y];
      if (v < 0 || v >= n) {
        throw OutOfRangeError(x, y, v, n);
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = table[x * n + y];
      for (int z = 0; z < n; ++z) {
        if (table[xy * n + z] != table[x * n + table[y * n + z]]) {
          throw NotAssociativeError(x, y, z);
        }
      }
    }
  }
  FiniteSemigroup s;
  s.n = n;
  s.table = std::move(table);
  return s;
}

std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> result;
  for (int e = 0; e < s.n; ++e) {
    if (s.at(e, e) == e) {
      result.push_back(e);
    }
  }
  return result;
}

std::vector<int> pseudoinverses(const FiniteSemigroup& s, int x) {
  std::vector<int> result;
  for (int y = 0; y < s.n; ++y) {
    if (s.at(x, y, x) == x) {
      result.push_back(y);
    }
  }
  return result;
}

RegularityReport is_regular(const FiniteSemigroup& s) {
  RegularityReport report;
  report.regular = true;
  report.witness.assign(s.n, -1);
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y) {
      if (s.at(x, y, x) == x) {
        report.witness[x] = y;
        break;
      }
    }
    if (report.witness[x] == -1 && report.regular) {
      report.regular = false;
      report.counterexample = x;
    }
  }
  return report;
}

EnoughIdempotentsReport has_enough_idempotents(const FiniteSemigroup& s) {
  EnoughIdempotentsReport report;
  report.enough = true;
  report.witness.assign(s.n, {-1, -1});
  std::vector<int> idem = idempotents(s);
  for (int x = 0; x < s.n; ++x) {
    bool found = false;
    for (int e : idem) {
      for (int f : idem) {
        if (s.at(e, x, f) == x) {
          report.witness[x] = {e, f};
          found = true;
          break;
        }
      }
      if (found) {
        break;
      }
    }
    if (!found && report.enough) {
      report.enough = false;
      report.counterexample = x;
    }
  }
  return report;
}

PowerSemigroup power_semigroup(const FiniteSemigroup& s, int max_order) {
  if (s.n > max_order || s.n > 12) {
    throw SizeBoundError("power semigroup bound: order " +
                         std::to_string(s.n) + " exceeds " +
                         std::to_string(std::min(max_order, 12)));
  }
  int count = (1 << s.n) - 1;  // nonempty subsets
  std::vector<int> table(static_cast<size_t>(count) * count);
  for (int ma = 1; ma <= count; ++ma) {
    for (int mb = 1; mb <= count; ++mb) {
      int prod = 0;
      for (int a = 0; a < s.n; ++a) {
        if (!(ma >> a & 1)) {
          continue;
        }
        for (int b = 0; b < s.n; ++b) {
          if (mb >> b & 1) {
            prod |= 1 << s.at(a, b);
          }
        }
      }
      table[static_cast<size_t>(ma - 1) * count + (mb - 1)] = prod - 1;
    }
  }
  PowerSemigroup p;
  p.sgr = validate_semigroup(count, std::move(table));
  p.singleton.resize(s.n);
  for (int a = 0; a < s.n; ++a) {
    p.singleton[a] = (1 << a) - 1;
  }
  return p;
}

FiniteSemigroup direct_product(const FiniteSemigroup& s,
                               const FiniteSemigroup& t) {
  int n = s.n * t.n;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < t.n; ++b) {
      for (int c = 0; c < s.n; ++c) {
        for (int d = 0; d < t.n; ++d) {
          int lhs = a * t.n + b;
          int rhs = c * t.n + d;
          table[static_cast<size_t>(lhs) * n + rhs] =
              s.at(a, c) * t.n + t.at(b, d);
        }
      }
    }
  }
  return validate_semigroup(n, std::move(table));
}

std::optional<int> identity_element(const FiniteSemigroup& s) {
  for (int e = 0; e < s.n; ++e) {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x) {
      ok = s.at(e, x) == x && s.at(x, e) == x;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

}  // namespace wirecat
