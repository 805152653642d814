// Copyright 2026 The coinrig Authors
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

namespace coinrig {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph / realization input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (bad vertex set, wrong sizes, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration refused because the instance exceeds the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A checked mathematical invariant failed. Always a bug or a counterexample.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace coinrig
