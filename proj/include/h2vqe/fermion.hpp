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
#include <vector>

#include "h2vqe/linalg.hpp"
#include "h2vqe/pauli.hpp"

namespace h2vqe {

struct SpinOrbitalIntegrals;

/// One creation (dagger) or annihilation operator on a spin-orbital mode.
struct LadderOp {
  std::size_t mode = 0;
  bool dagger = false;

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

/// coefficient * ladder[0] ladder[1] ... in the order given; an empty ladder is
/// a scalar.
struct FermionTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<LadderOp> ladder;
};

class FermionOperator {
 public:
  explicit FermionOperator(std::size_t n_modes = 0) : n_modes_(n_modes) {}

  std::size_t n_modes() const noexcept { return n_modes_; }
  const std::vector<FermionTerm>& terms() const noexcept { return terms_; }

  /// Throws std::invalid_argument for a mode >= n_modes.
  FermionOperator& add_term(FermionTerm term);
  FermionOperator& add_term(Complex coefficient, std::vector<LadderOp> ladder) {
    return add_term(FermionTerm{coefficient, std::move(ladder)});
  }

  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator*=(Complex scalar);
  friend FermionOperator operator+(FermionOperator a, const FermionOperator& b) {
    return a += b;
  }
  friend FermionOperator operator-(FermionOperator a, const FermionOperator& b) {
    FermionOperator neg = b;
    neg *= -1.0;
    return a += neg;
  }
  friend FermionOperator operator*(Complex s, FermionOperator a) { return a *= s; }

 private:
  std::size_t n_modes_ = 0;
  std::vector<FermionTerm> terms_;
};

inline LadderOp create(std::size_t mode) { return {mode, true}; }
inline LadderOp annihilate(std::size_t mode) { return {mode, false}; }

/// Reverses each ladder, flips daggers and conjugates coefficients.
FermionOperator hermitian_conjugate(const FermionOperator& op);

/// a+_n -> 1/2 [prod_{j<n} (-Z_j)] (X_n - i Y_n),
/// a_n  -> 1/2 [prod_{j<n} (-Z_j)] (X_n + i Y_n),
/// with mode n on qubit n. Products are expanded in Pauli space, merged and
/// pruned.
PauliSum jordan_wigner(const FermionOperator& op);

/// Image of a single ladder operator on `n_modes` qubits.
PauliSum jordan_wigner(const LadderOp& op, std::size_t n_modes);

/// H = sum h1[p][q] a+_p a_q + 1/2 sum h2[p][q][r][s] a+_p a+_q a_r a_s + h0.
/// Validates h1 hermiticity and the h2 index symmetries
/// h2[pqrs] = h2[qpsr] = h2[srqp] within 1e-10 (real orbitals).
FermionOperator assemble_hamiltonian(const SpinOrbitalIntegrals& ints);

}  // namespace h2vqe
