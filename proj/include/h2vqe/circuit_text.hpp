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

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "h2vqe/statevector.hpp"

namespace h2vqe {

/// Parse failure with 1-based line and column of the offending token.
class CircuitParseError : public std::invalid_argument {
 public:
  CircuitParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Line-oriented circuit text:
///
///   # comment
///   q 2              header: qubit count, first statement
///   h 0              i x y z h s t <qubit>
///   rz 1 0.25        rx ry rz <qubit> <radians>
///   cnot 0 1         cnot <control> <target>
///   pauli XZ 0.5     exp(-i angle/2 P), letters highest qubit first
Circuit parse_circuit_text(std::istream& is);
Circuit parse_circuit_text(const std::string& text);

}  // namespace h2vqe
