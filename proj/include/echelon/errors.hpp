// Copyright 2026 The Echelon Authors
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

#ifndef ECHELON_ERRORS_HPP
#define ECHELON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace echelon {

/// Bad arguments: out-of-range indices, mismatched sizes, unknown names.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cover list that does not describe a partial order.
class CycleError : public InputError {
 public:
  using InputError::InputError;
};

/// Operation called outside its mathematical domain (e.g. interval with x not <= y).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularMatrixError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotALatticeError : public DomainError {
 public:
  NotALatticeError(const std::string& what, int x, int y)
      : DomainError(what), x_(x), y_(y) {}
  int x() const { return x_; }
  int y() const { return y_; }

 private:
  int x_;
  int y_;
};

class NotSemidistributiveError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Block data handed to extension_from_blocks violates its preconditions.
class ConstraintError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised when an exhaustive computation would exceed a configured cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cross-check between two independent routes disagreed. Always a bug or
/// an input that slipped past a precondition.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace echelon

#endif  // ECHELON_ERRORS_HPP
