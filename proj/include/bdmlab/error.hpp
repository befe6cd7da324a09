// Copyright 2026 The bdmlab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace bdmlab {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph construction input (vertex out of range, self-loop).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// Malformed text input: graph6 lines, matrix records.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation that needs a connected graph received a disconnected one.
class Disconnected : public Error {
 public:
  Disconnected() : Error("graph is not connected") {}
};

// Input matrix cannot be realized by any graph of the requested kind.
class NotRealizable : public Error {
 public:
  using Error::Error;
};

// Two non-isomorphic Ptolemaic graphs share a boundary distance matrix.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because its node budget ran out.
class InfeasibleSearch : public Error {
 public:
  using Error::Error;
};

// More isomorphism classes found than the caller's cap allows.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace bdmlab
