// Copyright 2026 The framekernel Authors
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

namespace framekernel {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold
/// (non-square input, mismatched dimensions, exponent out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Shapes or lengths of the operands disagree.
class DimensionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A Hermitian matrix is singular or too badly conditioned to invert.
class ConditioningError : public Error {
 public:
  ConditioningError(const std::string& what, double smallest_eigenvalue)
      : Error(what), smallest_eigenvalue_(smallest_eigenvalue) {}

  double smallest_eigenvalue() const noexcept { return smallest_eigenvalue_; }

 private:
  double smallest_eigenvalue_;
};

/// The vectors handed to a frame constructor do not span the space.
class NotAFrameError : public Error {
 public:
  NotAFrameError(const std::string& what, double lower_bound, double upper_bound)
      : Error(what), lower_(lower_bound), upper_(upper_bound) {}

  double lower_bound() const noexcept { return lower_; }
  double upper_bound() const noexcept { return upper_; }

 private:
  double lower_;
  double upper_;
};

/// Malformed or inconsistent serialized input.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace framekernel
