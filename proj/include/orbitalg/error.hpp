// Copyright 2026 The orbitalg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORBITALG_ERROR_HPP
#define ORBITALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace orbitalg {

// Malformed or unsupported input (files, parameters, preconditions).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed: a computed structure violates an identity
// that must hold. Always a bug or corrupted data, never a user mistake.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised from inside long-running checks when a time budget expires.
class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("time budget exceeded") {}
};

}  // namespace orbitalg

#endif  // ORBITALG_ERROR_HPP
