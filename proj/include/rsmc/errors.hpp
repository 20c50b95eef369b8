// Copyright 2026 The rsmc Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsmc {

// Root of every error thrown by the library. The CLI maps InputError to exit
// code 2 and NumericalError to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class WeightError : public InputError {
 public:
  using InputError::InputError;
};

class DuplicateEdgeError : public InputError {
 public:
  using InputError::InputError;
};

class DirectedInputError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidProfileError : public InputError {
 public:
  using InputError::InputError;
};

class AllZeroProfileError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidSpecError : public InputError {
 public:
  using InputError::InputError;
};

class NegativeEpsilonError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownVertexError : public InputError {
 public:
  using InputError::InputError;
};

class TooLargeError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownDatasetError : public InputError {
 public:
  using InputError::InputError;
};

// (L + J/n) could not be factorized; a disconnected component slipped through.
class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace rsmc
