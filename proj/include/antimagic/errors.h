// Copyright 2026 The antimagic Authors
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

#ifndef ANTIMAGIC_ERRORS_H_
#define ANTIMAGIC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace antimagic {

// Root of every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter outside the documented domain (m < 3, n = 0, m > 10^4, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed text input (edge lists, vertex names, ranges).
class FormatError : public Error {
 public:
  using Error::Error;
};

// A labeling that is not total on the graph, or labels a non-edge.
class TotalityError : public Error {
 public:
  using Error::Error;
};

// A piecewise formula whose guards select zero or several branches for a
// cell, or which references a cell that does not exist.
class CoverageError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search asked to enumerate more edges than its configured limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace antimagic

#endif  // ANTIMAGIC_ERRORS_H_
