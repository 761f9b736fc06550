// Copyright 2026 The hamrec Authors
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

namespace hamrec {

/// Raised when an argument lies outside the documented domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string &msg) : std::domain_error(msg) {}
};

/// Raised when phase synthesis cannot complete a numerical step.
class SynthesisError : public std::runtime_error {
 public:
  SynthesisError(const std::string &msg, int step = -1)
      : std::runtime_error(
            step >= 0 ? msg + " (step " + std::to_string(step) + ")" : msg),
        step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

/// Raised when a request would exceed the supported problem size.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Raised when a dual certificate fails one of its checks.
class CertificateError : public std::runtime_error {
 public:
  explicit CertificateError(const std::string &msg)
      : std::runtime_error(msg) {}
};

/// Raised by iterative numerics that fail to converge.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace hamrec
