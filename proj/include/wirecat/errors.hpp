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

#ifndef WIRECAT_ERRORS_HPP_
#define WIRECAT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wirecat {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text could not be parsed. `line` is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("parse error at line " + std::to_string(line) + ": " + msg),
        line(line) {}
  int line;
};

// A structural invariant of a value failed at construction.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public ValidationError {
 public:
  OutOfRangeError(int row, int col, int entry, int n)
      : ValidationError("entry " + std::to_string(entry) + " at (" +
                        std::to_string(row) + "," + std::to_string(col) +
                        ") outside 0.." + std::to_string(n - 1)),
        row(row),
        col(col),
        entry(entry) {}
  int row, col, entry;
};

class NotAssociativeError : public ValidationError {
 public:
  NotAssociativeError(int x, int y, int z)
      : ValidationError("not associative at (" + std::to_string(x) + "," +
                        std::to_string(y) + "," + std::to_string(z) + ")"),
        x(x),
        y(y),
        z(z) {}
  int x, y, z;
};

class BadIdentityError : public ValidationError {
 public:
  explicit BadIdentityError(int object, const std::string& what)
      : ValidationError("bad identity at object " + std::to_string(object) +
                        ": " + what),
        object(object) {}
  int object;
};

class BadCompositeError : public ValidationError {
 public:
  BadCompositeError(int first, int second, const std::string& what)
      : ValidationError("bad composite (" + std::to_string(first) + ";" +
                        std::to_string(second) + "): " + what),
        first(first),
        second(second) {}
  int first, second;
};

class WireEndpointsError : public ValidationError {
 public:
  WireEndpointsError(int a, int b)
      : ValidationError("wire[" + std::to_string(a) + "][" +
                        std::to_string(b) + "] has wrong endpoints"),
        a(a),
        b(b) {}
  int a, b;
};

class WireDiagonalError : public ValidationError {
 public:
  explicit WireDiagonalError(int a)
      : ValidationError("wire[" + std::to_string(a) + "][" +
                        std::to_string(a) + "] is not the identity"),
        a(a) {}
  int a;
};

class NotHomomorphismError : public ValidationError {
 public:
  NotHomomorphismError(int x, int y)
      : ValidationError("map is not a homomorphism at pair (" +
                        std::to_string(x) + "," + std::to_string(y) + ")"),
        x(x),
        y(y) {}
  int x, y;
};

class NotPseudoinverseError : public ValidationError {
 public:
  NotPseudoinverseError(int x, int y)
      : ValidationError(std::to_string(y) + " is not a pseudoinverse of " +
                        std::to_string(x)),
        x(x),
        y(y) {}
  int x, y;
};

// A requested construction exceeds a configured size limit.
class SizeBoundError : public Error {
 public:
  using Error::Error;
};

// A function was applied where domains/codomains do not line up.
class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace wirecat

#endif  // WIRECAT_ERRORS_HPP_
