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

#include "wirecat/corpus.hpp"

#include <sstream>

#include "wirecat/cayley_io.hpp"
#include "wirecat/errors.hpp"

namespace wirecat {

namespace {

bool associative(int n, const std::vector<int>& table) {
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = table[x * n + y];
      for (int z = 0; z < n; ++z) {
        if (table[xy * n + z] != table[x * n + table[y * n + z]]) {
          return false;
        }
      }
    }
  }
  return true;
}

void check_order(int order) {
  if (order < 1 || order > 3) {
    throw SizeBoundError("corpus enumeration supports orders 1..3, got " +
                         std::to_string(order));
  }
}

}  // namespace

Corpus enumerate_semigroups(int order) {
  check_order(order);
  Corpus corpus;
  corpus.order = order;
  int cells = order * order;
  std::vector<int> table(cells, 0);
  while (true) {
    if (associative(order, table)) {
      corpus.tables.push_back(validate_semigroup(order, table));
    }
    int pos = cells - 1;
    while (pos >= 0 && table[pos] == order - 1) {
      table[pos--] = 0;
    }
    if (pos < 0) {
      break;
    }
    ++table[pos];
  }
  return corpus;
}

long long count_associative_reversed(int order) {
  check_order(order);
  int cells = order * order;
  std::vector<int> table(cells, 0);
  long long count = 0;
  while (true) {
    // Same predicate, different evaluation order.
    bool ok = true;
    for (int z = order - 1; z >= 0 && ok; --z) {
      for (int y = order - 1; y >= 0 && ok; --y) {
        for (int x = order - 1; x >= 0 && ok; --x) {
          ok = table[table[x * order + y] * order + z] ==
               table[x * order + table[y * order + z]];
        }
      }
    }
    if (ok) {
      ++count;
    }
    // First cell is the fastest digit here.
    int pos = 0;
    while (pos < cells && table[pos] == order - 1) {
      table[pos++] = 0;
    }
    if (pos == cells) {
      break;
    }
    ++table[pos];
  }
  return count;
}

std::vector<std::pair<std::string, FiniteSemigroup>> fixtures() {
  std::vector<std::pair<std::string, FiniteSemigroup>> result;
  result.emplace_back("LZ2", validate_semigroup(2, {0, 0, 1, 1}));
  result.emplace_back("NULL2", validate_semigroup(2, {0, 0, 0, 0}));
  result.emplace_back("SL2", validate_semigroup(2, {0, 0, 0, 1}));
  result.emplace_back("Z2", validate_semigroup(2, {0, 1, 1, 0}));
  // Pairs (a,b) as 2a+b, product (a,b)(c,d) = (a,d).
  result.emplace_back("RB22", validate_semigroup(4, {0, 1, 0, 1,    //
                                                     0, 1, 0, 1,    //
                                                     2, 3, 2, 3,    //
                                                     2, 3, 2, 3}));
  // Maps on {0,1} as 2*f(0)+f(1), composed left to right.
  result.emplace_back("T2", validate_semigroup(4, {0, 0, 3, 3,    //
                                                   0, 1, 2, 3,    //
                                                   0, 2, 1, 3,    //
                                                   0, 3, 0, 3}));
  return result;
}

FiniteSemigroup fixture(const std::string& name) {
  for (auto& [key, value] : fixtures()) {
    if (key == name) {
      return value;
    }
  }
  throw ValidationError("unknown fixture '" + name + "'");
}

std::string corpus_export(const Corpus& corpus) {
  std::ostringstream out;
  for (size_t i = 0; i < corpus.tables.size(); ++i) {
    if (i > 0) {
      out << "---\n";
    }
    out << format_cayley(corpus.tables[i]);
  }
  return out.str();
}

}  // namespace wirecat
