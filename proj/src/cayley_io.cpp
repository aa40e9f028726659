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

#include "wirecat/cayley_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "wirecat/errors.hpp"

namespace wirecat {

namespace {

struct Line {
  int number;  // 1-based position in the input
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    lines.push_back({number, line});
  }
  return lines;
}

std::vector<int> parse_ints(const Line& line) {
  std::istringstream in(line.text);
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    try {
      size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) {
        throw std::invalid_argument(token);
      }
      values.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(line.number, "expected an integer, got '" + token + "'");
    }
  }
  return values;
}

}  // namespace

FiniteSemigroup parse_cayley(const std::string& text) {
  std::vector<Line> lines = content_lines(text);
  if (lines.empty()) {
    throw ParseError(1, "missing order line");
  }
  std::vector<int> head = parse_ints(lines[0]);
  if (head.size() != 1) {
    throw ParseError(lines[0].number, "order line must hold a single integer");
  }
  int n = head[0];
  if (n < 1) {
    throw ParseError(lines[0].number, "order must be >= 1");
  }
  if (static_cast<int>(lines.size()) != n + 1) {
    int at = lines.size() < static_cast<size_t>(n) + 1
                 ? lines.back().number
                 : lines[n + 1].number;
    throw ParseError(at, "expected " + std::to_string(n) + " table rows, got " +
                             std::to_string(lines.size() - 1));
  }
  std::vector<int> table;
  table.reserve(static_cast<size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    std::vector<int> entries = parse_ints(lines[row + 1]);
    if (static_cast<int>(entries.size()) != n) {
      throw ParseError(lines[row + 1].number,
                       "row has " + std::to_string(entries.size()) +
                           " entries, expected " + std::to_string(n));
    }
    for (int v : entries) {
      if (v < 0 || v >= n) {
        throw ParseError(lines[row + 1].number,
                         "entry " + std::to_string(v) + " outside 0.." +
                             std::to_string(n - 1));
      }
      table.push_back(v);
    }
  }
  return validate_semigroup(n, std::move(table));
}

FiniteSemigroup read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cayley(buffer.str());
}

std::string format_cayley(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << s.n << "\n";
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y) {
      if (y > 0) {
        out << ' ';
      }
      out << s.at(x, y);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace wirecat
