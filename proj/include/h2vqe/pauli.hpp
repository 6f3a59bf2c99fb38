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
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "h2vqe/linalg.hpp"
#include "h2vqe/pauli_string.hpp"
#include "h2vqe/statevector.hpp"

namespace h2vqe {

struct PauliTerm {
  Complex coefficient;
  PauliString string;
};

/// Weighted sum of Pauli strings on a fixed qubit count. Terms are kept merged,
/// pruned below kPruneThreshold and sorted by (z_mask, x_mask).
class PauliSum {
 public:
  static constexpr double kPruneThreshold = 1e-12;

  explicit PauliSum(std::size_t n_qubits = 0) : n_qubits_(n_qubits) {}
  PauliSum(std::size_t n_qubits, std::span<const PauliTerm> terms);

  static PauliSum identity(std::size_t n_qubits, Complex coefficient = 1.0);
  static PauliSum from_string(const PauliString& s, Complex coefficient = 1.0);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Canonically ordered terms.
  std::vector<PauliTerm> terms() const;
  /// Coefficient of `s`, zero when absent.
  Complex coefficient(const PauliString& s) const;

  /// Every coefficient real within 1e-12.
  bool hermitian() const;

  PauliSum& add_term(Complex coefficient, const PauliString& s);
  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scalar);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  /// Coefficient-wise comparison within `tol`.
  bool approx_equal(const PauliSum& other, double tol) const;

 private:
  void prune();

  std::size_t n_qubits_ = 0;
  std::map<PauliString, Complex> terms_;
};

/// <psi|op|psi> through per-term bitmask kernels. Throws std::invalid_argument
/// for a non-hermitian operator or a size mismatch.
double expectation(const PauliSum& op, const Statevector& state);

/// Exact <psi|P|psi> for a single string (complex in general).
Complex expectation(const PauliString& p, const Statevector& state);

struct SampledEnergy {
  double energy = 0.0;
  double std_error = 0.0;
};

/// Shot-based estimate: each non-identity term is rotated into the Z basis
/// (H for X, Rx(pi/2) for Y), sampled `shots` times with its own derived seed,
/// and its +-1 parities averaged. The identity term is added exactly.
SampledEnergy sampled_expectation(const PauliSum& op, const Statevector& state,
                                  std::size_t shots, std::uint64_t seed);

/// Runs `circuit` with `params` on |0...0> and samples as above.
SampledEnergy sampled_expectation(const PauliSum& op, const Circuit& circuit,
                                  std::span<const double> params, std::size_t shots,
                                  std::uint64_t seed);

/// Gates that rotate `p`'s eigenbasis onto the computational basis.
std::vector<Gate> measurement_basis_change(const PauliString& p);

/// Dense matrix, n_qubits <= 12.
ComplexMatrix to_dense_matrix(const PauliSum& op);

struct GroundState {
  double energy = 0.0;
  Statevector state{0};
};

/// Smallest eigenvalue and a unit eigenvector of the dense matrix.
GroundState exact_ground_energy(const PauliSum& op);

/// -1/2 (II + XX + YY + ZZ) + d (ZI + IZ).
PauliSum build_two_qubit_model(double d);

/// One term per line: `<re> <im> <letters>`, highest qubit leftmost.
void write_pauli_sum(std::ostream& os, const PauliSum& op, int precision = 17);
std::string to_text(const PauliSum& op, int precision = 17);
/// Inverse of write_pauli_sum; blank lines and `#` comments are skipped.
PauliSum read_pauli_sum(std::istream& is);

}  // namespace h2vqe
