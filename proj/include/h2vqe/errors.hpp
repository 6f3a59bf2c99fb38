// Copyright 2026 The h2vqe Authors
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

namespace h2vqe {

// Invalid arguments are reported with std::invalid_argument. The classes
// below cover the remaining failure kinds.

/// Operation requested on an object in the wrong state (unbound circuit
/// parameter, unconverged SCF result, ...).
class InvalidState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Request exceeds a hard size limit (dense matrices beyond 12 qubits).
class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Input is well formed but outside the supported feature set.
class UnsupportedFeature : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Iterative method stopped without meeting its criterion. `Payload` carries
/// the last iterate.
template <typename Payload>
class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& what, Payload last)
      : std::runtime_error(what), last_(std::move(last)) {}

  const Payload& last_iterate() const noexcept { return last_; }

 private:
  Payload last_;
};

}  // namespace h2vqe
