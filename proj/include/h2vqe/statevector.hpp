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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "h2vqe/linalg.hpp"
#include "h2vqe/pauli_string.hpp"

namespace h2vqe {

/// Dense n-qubit register. Qubit k is bit k of the basis index; bitstrings
/// print most-significant qubit first, so index 2 on two qubits is "10".
class Statevector {
 public:
  static constexpr std::size_t kMaxQubits = 24;

  /// |0...0> on n qubits.
  explicit Statevector(std::size_t n_qubits);

  /// Takes ownership of the amplitudes; length must be a power of two. No
  /// normalization is applied.
  static Statevector from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  double norm_squared() const;

  /// In-place 2x2 unitary on `target`, row-major {u00, u01, u10, u11}.
  void apply_single(const std::array<Complex, 4>& u, std::size_t target);
  void apply_cnot(std::size_t control, std::size_t target);
  /// exp(-i angle/2 P).
  void apply_pauli_rotation(const PauliString& axis, double angle);
  /// |psi> -> P|psi>.
  void apply_pauli(const PauliString& p);

  std::string bitstring(std::size_t index) const;

 private:
  Statevector(std::size_t n_qubits, std::vector<Complex> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  std::size_t n_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// |b_{n-1} ... b_0> with bits given in print order (highest qubit first).
Statevector init_basis_state(std::size_t n_qubits, std::span<const int> bits);

/// |<a|b>|^2 for equal-size states.
double fidelity(const Statevector& a, const Statevector& b);

enum class GateKind { I, X, Y, Z, H, S, T, Rx, Ry, Rz, CNOT, PauliRotation };

std::string to_string(GateKind kind);

struct Gate {
  GateKind kind = GateKind::I;
  std::vector<std::size_t> targets;
  std::optional<std::size_t> control;
  /// Radians; empty while a parameterized gate is unbound.
  std::optional<double> angle;
  /// Rotation axis, PauliRotation only.
  PauliString axis;

  static Gate single(GateKind kind, std::size_t target);
  static Gate rotation(GateKind kind, std::size_t target, std::optional<double> angle);
  static Gate cnot(std::size_t control, std::size_t target);
  static Gate pauli_rotation(const PauliString& axis, std::optional<double> angle);

  bool is_parameterized_kind() const noexcept;
  /// Largest qubit index referenced, or nothing for a gate without qubits.
  std::optional<std::size_t> max_qubit() const;
};

/// 2x2 matrix of a bound single-qubit gate, row-major.
std::array<Complex, 4> single_qubit_matrix(const Gate& gate);

/// Applies a bound gate in place.
void apply_gate(Statevector& state, const Gate& gate);

/// Parameterized-gate binding: angle = scale * params[parameter].
struct ParameterSlot {
  std::size_t gate_index = 0;
  std::size_t parameter = 0;
  double scale = 1.0;
};

class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits = 0) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<ParameterSlot>& parameter_slots() const noexcept { return slots_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  /// Number of distinct circuit parameters (largest id + 1).
  std::size_t n_parameters() const noexcept { return n_params_; }

  /// Appends a gate whose angle, if any, is already bound.
  Circuit& add(Gate gate);
  /// Appends a gate whose angle is scale * params[parameter] at run time.
  Circuit& add_parameterized(Gate gate, std::size_t parameter, double scale = 1.0);
  /// Raises the parameter count to at least `n` (for ids with no slot left).
  Circuit& declare_parameters(std::size_t n) {
    if (n > n_params_) n_params_ = n;
    return *this;
  }
  /// Appends every gate and slot of `other` (parameter ids kept as is).
  Circuit& append(const Circuit& other);

  /// Adds `delta` to the angle of a bound gate; InvalidState if unbound.
  Circuit& offset_angle(std::size_t gate_index, double delta);

  /// Copy with every slot bound; the result has no slots.
  Circuit bind(std::span<const double> params) const;

 private:
  void check_qubits(const Gate& gate) const;

  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<ParameterSlot> slots_;
  std::size_t n_params_ = 0;
};

/// Runs `circuit` on a copy of `initial` with `params` bound.
Statevector run_circuit(const Circuit& circuit, const Statevector& initial,
                        std::span<const double> params = {});

struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// theta in [0, pi], phi in [0, 2 pi), matching cos(theta/2)|0> +
/// e^{i phi} sin(theta/2)|1> up to global phase.
BlochAngles bloch_angles(const Statevector& state);

/// Histogram keyed by printed bitstring.
using Histogram = std::map<std::string, std::size_t>;

/// Born-rule sampling of basis indices, reproducible for a fixed seed.
std::vector<std::size_t> sample_indices(const Statevector& state, std::size_t shots,
                                        std::uint64_t seed);
Histogram sample_measurements(const Statevector& state, std::size_t shots,
                              std::uint64_t seed);

}  // namespace h2vqe
