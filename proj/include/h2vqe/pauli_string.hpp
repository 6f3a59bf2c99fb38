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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace h2vqe {

/// Tensor product of single-qubit Paulis stored as (x, z) bitmasks. Qubit k
/// carries I, X, Z or Y for (x_k, z_k) = (0,0), (1,0), (0,1), (1,1).
class PauliString {
 public:
  static constexpr std::size_t kMaxQubits = 64;

  PauliString() = default;
  PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  static PauliString identity(std::size_t n_qubits) { return {n_qubits, 0, 0}; }

  /// Single-letter string: `letter` on `qubit`, identity elsewhere.
  static PauliString single(std::size_t n_qubits, std::size_t qubit, char letter);

  /// Parses letters with the leftmost character acting on the highest qubit,
  /// e.g. "ZI" is Z on qubit 1.
  static PauliString from_letters(std::string_view letters);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }
  std::uint64_t support() const noexcept { return x_ | z_; }
  bool is_identity() const noexcept { return (x_ | z_) == 0; }

  char letter(std::size_t qubit) const;

  /// Highest qubit printed first.
  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

  /// Canonical order: (z_mask, x_mask), then qubit count.
  friend bool operator<(const PauliString& a, const PauliString& b) {
    if (a.z_ != b.z_) return a.z_ < b.z_;
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.n_qubits_ < b.n_qubits_;
  }

 private:
  std::size_t n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Phase i^k for k in {0,1,2,3}, i.e. +1, +i, -1, -i.
struct PauliPhase {
  int power = 0;

  std::complex<double> value() const;
  friend bool operator==(const PauliPhase&, const PauliPhase&) = default;
};

struct PauliProduct {
  PauliPhase phase;
  PauliString string;
};

/// a * b = phase * string, qubit-wise (XY = iZ, YZ = iX, ZX = iY).
PauliProduct pauli_multiply(const PauliString& a, const PauliString& b);

}  // namespace h2vqe
