// Copyright 2026 The nlq Authors
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

namespace nlq {

/// Bad input to a public operation: wrong dimension, non-unit vector,
/// probability out of range, malformed measurement basis.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A branch-level operation was asked for the S-marginal of an entangled
/// branch, which has no pure S state of its own.
class NotProduct : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Collapse onto an outcome whose probability is (numerically) zero.
class ImpossibleOutcome : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scenario configuration under which the contrasted arms coincide.
class DegenerateConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity failed, e.g. a mean value of a hermitian operator
/// came out with a non-negligible imaginary part.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nlq
