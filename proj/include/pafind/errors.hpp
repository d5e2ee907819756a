// Copyright 2026 The pafind Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pafind {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid model or algorithm parameter (n = 0, m = 0, empty ladder, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A point or index outside the domain of an operation.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A vertex handle that does not belong to the oracle it was passed to.
class HandleError : public Error {
 public:
  using Error::Error;
};

// Invalid search configuration (thresholds out of order, zero budget, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A statistical estimate cannot be resolved at the requested sample size.
// Carries the sample size that would suffice when it is known.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what,
                          std::uint64_t required_trials = 0)
      : Error(what), required_trials_(required_trials) {}

  std::uint64_t required_trials() const { return required_trials_; }

 private:
  std::uint64_t required_trials_;
};

// Inputs that were expected to come from the same run disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Too few data points for a fit or summary.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pafind
