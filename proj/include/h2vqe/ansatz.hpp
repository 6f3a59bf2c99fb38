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
#include <string>
#include <utility>
#include <vector>

#include "h2vqe/fermion.hpp"
#include "h2vqe/statevector.hpp"

namespace h2vqe {

struct SingleExcitation {
  std::size_t occupied = 0;
  std::size_t virtual_ = 0;

  friend bool operator==(const SingleExcitation&, const SingleExcitation&) = default;
};

struct DoubleExcitation {
  std::pair<std::size_t, std::size_t> occupied;
  std::pair<std::size_t, std::size_t> virtual_;

  friend bool operator==(const DoubleExcitation&, const DoubleExcitation&) = default;
};

/// Spin-conserving excitations out of the Hartree-Fock reference. One circuit
/// parameter per entry, singles first.
struct ExcitationList {
  std::vector<SingleExcitation> singles;
  std::vector<DoubleExcitation> doubles;

  std::size_t size() const noexcept { return singles.size() + doubles.size(); }
  bool empty() const noexcept { return size() == 0; }
};

/// Modes occupied in the reference determinant: the lowest spatial orbitals
/// of each spin in blocked ordering (alpha 0..k-1, beta n/2..n/2+k-1).
std::vector<std::size_t> hartree_fock_occupied(std::size_t n_modes, std::size_t n_electrons);

/// X on every occupied mode; applied to |0...0> it prepares the reference.
Circuit hartree_fock_circuit(std::size_t n_modes, std::size_t n_electrons);

ExcitationList uccsd_excitations(std::size_t n_modes, std::size_t n_electrons);

/// Excitation operator T for one excitation (a+_a a_i or a+_a a+_b a_j a_i).
FermionOperator excitation_operator(const SingleExcitation& ex, std::size_t n_modes);
FermionOperator excitation_operator(const DoubleExcitation& ex, std::size_t n_modes);

/// exp(sum_k t_k (T_k - T_k^dagger)) as one first-order Trotter step: each
/// generator is Jordan-Wigner mapped and every Pauli term becomes one
/// PauliRotation sharing parameter k.
Circuit build_uccsd_circuit(const ExcitationList& ex, std::size_t n_modes);

struct LoweredCircuit {
  Circuit circuit;
  std::vector<std::string> warnings;
};

/// Rewrites every PauliRotation as basis changes, a CNOT ladder onto the
/// highest support qubit, Rz and the mirror image. Identity-axis rotations
/// are a global phase; they are dropped and reported in `warnings`.
LoweredCircuit lower_pauli_rotations(const Circuit& circuit);

}  // namespace h2vqe
