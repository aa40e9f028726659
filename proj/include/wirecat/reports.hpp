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

#ifndef WIRECAT_REPORTS_HPP_
#define WIRECAT_REPORTS_HPP_

#include <string>

#include "wirecat/semigroupad.hpp"
#include "wirecat/semigroup.hpp"
#include "wirecat/wired.hpp"

namespace wirecat {

// Plain-text reports with deterministic formatting, shared by the C API
// and the command line.  All of them end with a newline.

// Order, idempotents, regularity, enough idempotents and the support map
// into pairs of idempotent subsets.
std::string analyze_report(const FiniteSemigroup& s);

// "<m> objects, <k> arrows" plus object and arrow listings of the Karoubi
// envelope.
std::string karoubi_summary(const FiniteSemigroup& s,
                            int max_arrows = kDefaultMaxArrows);

// JSON export of the Karoubi envelope as a wired category, objects named
// by their idempotent and arrows by their triple.
std::string karoubi_json(const FiniteSemigroup& s,
                         int max_arrows = kDefaultMaxArrows);

// Reflexivity/symmetry/parallel collapse and the transitivity search on
// the principal identifier relation of K(s).
std::string theta_report_text(const FiniteSemigroup& s,
                              int max_arrows = kDefaultMaxArrows);

// Split epi -- split mono factorization of every arrow of K(s).
std::string factorize_report_text(const FiniteSemigroup& s,
                                  int max_arrows = kDefaultMaxArrows);

// Per-family constant classification for a semigroupad; when `transfer`
// is non-null, also the four transfer implications into the induced
// semigroup on T(transfer) for every element e.
std::string constants_report_text(const Semigroupad& t,
                                  const FiniteSemigroup* transfer,
                                  int size_bound = 3);

}  // namespace wirecat

#endif  // WIRECAT_REPORTS_HPP_
