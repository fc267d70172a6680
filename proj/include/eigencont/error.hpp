// Copyright 2026 The eigencont Authors
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

namespace eigencont {

// Root of the library's exception hierarchy. The C API maps each subclass
// onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (shape mismatch, out-of-range
// index, unnormalized input, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Hilbert-space dimension exceeds the configured qubit cap.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent external data (coefficient tables, files).
class DataError : public Error {
 public:
  using Error::Error;
};

// Config text failed to parse or validate. `line()` is 0 when the problem is
// not tied to a specific line.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Numerical failure: zero retained rank, non-Hermitian input, ...
class NumericsError : public Error {
 public:
  using Error::Error;
};

}  // namespace eigencont
