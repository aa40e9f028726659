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

#ifndef WIRECAT_CAYLEY_IO_HPP_
#define WIRECAT_CAYLEY_IO_HPP_

#include <string>

#include "wirecat/semigroup.hpp"

namespace wirecat {

// Cayley table text format:
//   line 1: the order n
//   lines 2..n+1: n space-separated entries in 0..n-1, row x column y = x*y
// Blank lines and lines starting with `#` are ignored.  Files written by
// format_cayley end with a newline.

// Throws ParseError (with a 1-based line number) or a ValidationError from
// validate_semigroup.
FiniteSemigroup parse_cayley(const std::string& text);

FiniteSemigroup read_cayley_file(const std::string& path);

std::string format_cayley(const FiniteSemigroup& s);

}  // namespace wirecat

#endif  // WIRECAT_CAYLEY_IO_HPP_
