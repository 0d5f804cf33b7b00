// Copyright 2026 The ursa developers.
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

namespace ursa {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimensions.
class DimMismatchError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural invariant (Hermiticity, trace, positivity,
/// unitarity, meter commutation, spectrum shape, unit norm, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Scalar argument outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined at the maximally mixed state.
class MaximallyMixedStateError : public Error {
 public:
  using Error::Error;
};

/// A scale parameter that must be nonzero is zero.
class ZeroScaleError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine exhausted its budget without meeting its tolerance.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace ursa
