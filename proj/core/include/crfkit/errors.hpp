// Copyright 2026 The crfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace crfkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument: bad digit, bad subset, shape mismatch, non-unitary factor.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The input has no meaningful normalization or geometry (all-zero state,
/// frame without defined vertices, zero-length direction vector).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A vertex label was requested whose slice weight is below the absent threshold.
class UndefinedVertexError : public Error {
 public:
  using Error::Error;
};

/// Dense representation or enumeration would exceed the configured bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed or produced an out-of-range value.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input that violates its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace crfkit
