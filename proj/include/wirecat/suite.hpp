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

#ifndef WIRECAT_SUITE_HPP_
#define WIRECAT_SUITE_HPP_

#include <string>
#include <vector>

#include "wirecat/wired.hpp"

namespace wirecat {

// Exhaustive verification of every statement the library implements, over
// all labeled semigroups of order <= max_order plus the named fixtures.
// Lines are PASS/FAIL/INFO prefixed, deterministic, ASCII only.
struct SuiteOptions {
  // one of: all, regularity, adjunction, theta, semigroupad, constants
  std::string suite = "all";
  int max_order = 3;
  int max_arrows = kDefaultMaxArrows;
};

struct SuiteReport {
  std::vector<std::string> lines;
  int failures = 0;

  bool ok() const { return failures == 0; }
  std::string text() const;
};

SuiteReport run_suite(const SuiteOptions& options);

}  // namespace wirecat

#endif  // WIRECAT_SUITE_HPP_
