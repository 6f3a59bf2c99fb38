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

#include "h2vqe/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "h2vqe/errors.hpp"
#include "h2vqe/rng.hpp"

namespace h2vqe {

namespace {

constexpr Complex kI{0.0, 1.0};

// i^{n_y} (-1)^{popcount(index & z)}, the phase of P|index>.
Complex pauli_phase(const PauliString& p, std::size_t index) {
  const int ny = std::popcount(p.x_mask() & p.z_mask());
  const int sign = std::popcount(static_cast<std::uint64_t>(index) & p.z_mask());
  return PauliPhase{ny + 2 * sign}.value();
}

void check_qubit(const Statevector& s, std::size_t q) {
  if (q >= s.n_qubits())
    throw std::invalid_argument("qubit index " + std::to_string(q) +
                                " out of range for " + std::to_string(s.n_qubits()) +
                                "-qubit state");
}

}  // namespace

Statevector::Statevector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits > kMaxQubits)
    throw ResourceLimit("Statevector: at most 24 qubits supported");
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
  amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim == 0 || !std::has_single_bit(dim))
    throw std::invalid_argument("Statevector: length must be a power of two");
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  if (n > kMaxQubits) throw ResourceLimit("Statevector: at most 24 qubits supported");
  return Statevector(n, std::move(amplitudes));
}

double Statevector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void Statevector::apply_single(const std::array<Complex, 4>& u, std::size_t target) {
  check_qubit(*this, target);
  const std::size_t bit = std::size_t{1} << target;
  const std::size_t dim = amps_.size();
  for (std::size_t block = 0; block < dim; block += 2 * bit) {
    for (std::size_t i0 = block; i0 < block + bit; ++i0) {
      const std::size_t i1 = i0 | bit;
      const Complex a0 = amps_[i0];
      const Complex a1 = amps_[i1];
      amps_[i0] = u[0] * a0 + u[1] * a1;
      amps_[i1] = u[2] * a0 + u[3] * a1;
    }
  }
}

void Statevector::apply_cnot(std::size_t control, std::size_t target) {
  check_qubit(*this, control);
  check_qubit(*this, target);
  if (control == target)
    throw std::invalid_argument("CNOT: control and target must differ");
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
  }
}

void Statevector::apply_pauli_rotation(const PauliString& axis, double angle) {
  if (axis.n_qubits() != n_qubits_)
    throw std::invalid_argument("PauliRotation: axis size differs from register");
  const double c = std::cos(angle / 2.0);
  const Complex ms = -kI * std::sin(angle / 2.0);
  const std::uint64_t x = axis.x_mask();
  if (x == 0) {
    for (std::size_t i = 0; i < amps_.size(); ++i)
      amps_[i] *= c + ms * pauli_phase(axis, i);
    return;
  }
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const std::size_t j = i ^ x;
    if (j < i) continue;
    const Complex ai = amps_[i];
    const Complex aj = amps_[j];
    // (P psi)[i] = phase(j) psi[j]
    amps_[i] = c * ai + ms * pauli_phase(axis, j) * aj;
    amps_[j] = c * aj + ms * pauli_phase(axis, i) * ai;
  }
}

void Statevector::apply_pauli(const PauliString& p) {
  if (p.n_qubits() != n_qubits_)
    throw std::invalid_argument("apply_pauli: size differs from register");
  std::vector<Complex> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i)
    out[i ^ p.x_mask()] = pauli_phase(p, i) * amps_[i];
  amps_ = std::move(out);
}

std::string Statevector::bitstring(std::size_t index) const {
  std::string s(n_qubits_, '0');
  for (std::size_t q = 0; q < n_qubits_; ++q)
    if ((index >> q) & 1U) s[n_qubits_ - 1 - q] = '1';
  return s;
}

Statevector init_basis_state(std::size_t n_qubits, std::span<const int> bits) {
  if (bits.size() != n_qubits)
    throw std::invalid_argument("init_basis_state: bitstring length " +
                                std::to_string(bits.size()) + " != " +
                                std::to_string(n_qubits));
  Statevector s(n_qubits);
  std::size_t index = 0;
  for (std::size_t pos = 0; pos < n_qubits; ++pos) {
    if (bits[pos] != 0 && bits[pos] != 1)
      throw std::invalid_argument("init_basis_state: bits must be 0 or 1");
    if (bits[pos]) index |= std::size_t{1} << (n_qubits - 1 - pos);
  }
  s[0] = 0.0;
  s[index] = 1.0;
  return s;
}

double fidelity(const Statevector& a, const Statevector& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("fidelity: dimension mismatch");
  Complex overlap{};
  for (std::size_t i = 0; i < a.dimension(); ++i) overlap += std::conj(a[i]) * b[i];
  return std::norm(overlap);
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::I: return "i";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::T: return "t";
    case GateKind::Rx: return "rx";
    case GateKind::Ry: return "ry";
    case GateKind::Rz: return "rz";
    case GateKind::CNOT: return "cnot";
    case GateKind::PauliRotation: return "pauli";
  }
  return "?";
}

Gate Gate::single(GateKind kind, std::size_t target) {
  Gate g;
  g.kind = kind;
  g.targets = {target};
  return g;
}

Gate Gate::rotation(GateKind kind, std::size_t target, std::optional<double> angle) {
  if (kind != GateKind::Rx && kind != GateKind::Ry && kind != GateKind::Rz)
    throw std::invalid_argument("Gate::rotation: kind must be Rx, Ry or Rz");
  Gate g = single(kind, target);
  g.angle = angle;
  return g;
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
  if (control == target)
    throw std::invalid_argument("CNOT: control and target must differ");
  Gate g;
  g.kind = GateKind::CNOT;
  g.targets = {target};
  g.control = control;
  return g;
}

Gate Gate::pauli_rotation(const PauliString& axis, std::optional<double> angle) {
  Gate g;
  g.kind = GateKind::PauliRotation;
  g.axis = axis;
  g.angle = angle;
  for (std::size_t q = 0; q < axis.n_qubits(); ++q)
    if ((axis.support() >> q) & 1U) g.targets.push_back(q);
  return g;
}

bool Gate::is_parameterized_kind() const noexcept {
  return kind == GateKind::Rx || kind == GateKind::Ry || kind == GateKind::Rz ||
         kind == GateKind::PauliRotation;
}

std::optional<std::size_t> Gate::max_qubit() const {
  std::optional<std::size_t> m;
  for (auto t : targets) m = std::max(m.value_or(0), t);
  if (control) m = std::max(m.value_or(0), *control);
  if (kind == GateKind::PauliRotation && axis.n_qubits() > 0)
    m = std::max(m.value_or(0), axis.n_qubits() - 1);
  return m;
}

std::array<Complex, 4> single_qubit_matrix(const Gate& gate) {
  using std::numbers::pi;
  const double r = 1.0 / std::numbers::sqrt2;
  auto bound_angle = [&] {
    if (!gate.angle) throw InvalidState("gate " + to_string(gate.kind) + " has an unbound angle");
    return *gate.angle;
  };
  switch (gate.kind) {
    case GateKind::I: return {1.0, 0.0, 0.0, 1.0};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -kI, kI, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::H: return {r, r, r, -r};
    case GateKind::S: return {1.0, 0.0, 0.0, kI};
    case GateKind::T: return {1.0, 0.0, 0.0, std::polar(1.0, pi / 4.0)};
    case GateKind::Rx: {
      const double t = bound_angle();
      const Complex c = std::cos(t / 2.0), s = -kI * std::sin(t / 2.0);
      return {c, s, s, c};
    }
    case GateKind::Ry: {
      const double t = bound_angle();
      const double c = std::cos(t / 2.0), s = std::sin(t / 2.0);
      return {c, -s, s, c};
    }
    case GateKind::Rz: {
      const double t = bound_angle();
      return {std::polar(1.0, -t / 2.0), 0.0, 0.0, std::polar(1.0, t / 2.0)};
    }
    default:
      throw std::invalid_argument("single_qubit_matrix: " + to_string(gate.kind) +
                                  " is not a single-qubit gate");
  }
}

void apply_gate(Statevector& state, const Gate& gate) {
  if (auto m = gate.max_qubit(); m && *m >= state.n_qubits())
    throw std::invalid_argument("gate " + to_string(gate.kind) + " references qubit " +
                                std::to_string(*m) + " beyond register of " +
                                std::to_string(state.n_qubits()));
  switch (gate.kind) {
    case GateKind::CNOT:
      if (!gate.control || gate.targets.size() != 1)
        throw std::invalid_argument("CNOT needs one control and one target");
      state.apply_cnot(*gate.control, gate.targets[0]);
      return;
    case GateKind::PauliRotation:
      if (!gate.angle) throw InvalidState("PauliRotation has an unbound angle");
      state.apply_pauli_rotation(gate.axis, *gate.angle);
      return;
    default:
      if (gate.targets.size() != 1)
        throw std::invalid_argument("single-qubit gate needs exactly one target");
      state.apply_single(single_qubit_matrix(gate), gate.targets[0]);
  }
}

void Circuit::check_qubits(const Gate& gate) const {
  if (auto m = gate.max_qubit(); m && *m >= n_qubits_)
    throw std::invalid_argument("gate " + to_string(gate.kind) + " references qubit " +
                                std::to_string(*m) + " in a " + std::to_string(n_qubits_) +
                                "-qubit circuit");
  if (gate.kind == GateKind::PauliRotation && gate.axis.n_qubits() != n_qubits_)
    throw std::invalid_argument("PauliRotation axis size differs from circuit");
}

Circuit& Circuit::add(Gate gate) {
  check_qubits(gate);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::add_parameterized(Gate gate, std::size_t parameter, double scale) {
  if (!gate.is_parameterized_kind())
    throw std::invalid_argument("gate " + to_string(gate.kind) + " takes no angle");
  check_qubits(gate);
  gate.angle.reset();
  slots_.push_back({gates_.size(), parameter, scale});
  gates_.push_back(std::move(gate));
  n_params_ = std::max(n_params_, parameter + 1);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_)
    throw std::invalid_argument("Circuit::append: qubit count mismatch");
  const std::size_t offset = gates_.size();
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  for (auto slot : other.slots_) {
    slot.gate_index += offset;
    slots_.push_back(slot);
  }
  n_params_ = std::max(n_params_, other.n_params_);
  return *this;
}

Circuit& Circuit::offset_angle(std::size_t gate_index, double delta) {
  if (gate_index >= gates_.size())
    throw std::invalid_argument("Circuit::offset_angle: gate index out of range");
  auto& angle = gates_[gate_index].angle;
  if (!angle) throw InvalidState("Circuit::offset_angle: gate angle is unbound");
  *angle += delta;
  return *this;
}

Circuit Circuit::bind(std::span<const double> params) const {
  if (params.size() != n_params_)
    throw std::invalid_argument("Circuit::bind: expected " + std::to_string(n_params_) +
                                " parameters, got " + std::to_string(params.size()));
  Circuit out(n_qubits_);
  out.gates_ = gates_;
  for (const auto& slot : slots_)
    out.gates_[slot.gate_index].angle = slot.scale * params[slot.parameter];
  return out;
}

Statevector run_circuit(const Circuit& circuit, const Statevector& initial,
                        std::span<const double> params) {
  if (initial.n_qubits() != circuit.n_qubits())
    throw std::invalid_argument("run_circuit: state has " +
                                std::to_string(initial.n_qubits()) + " qubits, circuit " +
                                std::to_string(circuit.n_qubits()));
  const Circuit bound = circuit.bind(params);
  Statevector state = initial;
  for (const auto& g : bound.gates()) apply_gate(state, g);
  return state;
}

BlochAngles bloch_angles(const Statevector& state) {
  if (state.n_qubits() != 1)
    throw std::invalid_argument("bloch_angles: state must be a single qubit");
  const Complex a = state[0];
  const Complex b = state[1];
  constexpr double tiny = 1e-12;
  BlochAngles out;
  out.theta = 2.0 * std::atan2(std::abs(b), std::abs(a));
  if (std::abs(a) > tiny && std::abs(b) > tiny) {
    double phi = std::arg(b) - std::arg(a);
    phi = std::fmod(phi, 2.0 * std::numbers::pi);
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
    out.phi = phi;
  }
  return out;
}

std::vector<std::size_t> sample_indices(const Statevector& state, std::size_t shots,
                                        std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample_measurements: shots must be >= 1");
  std::vector<double> cumulative(state.dimension());
  double total = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    total += std::norm(state[i]);
    cumulative[i] = total;
  }
  Rng rng(seed);
  std::vector<std::size_t> out;
  out.reserve(shots);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
    if (idx >= cumulative.size()) {
      idx = cumulative.size() - 1;
      while (idx > 0 && std::norm(state[idx]) == 0.0) --idx;
    }
    out.push_back(idx);
  }
  return out;
}

Histogram sample_measurements(const Statevector& state, std::size_t shots,
                              std::uint64_t seed) {
  Histogram h;
  for (auto idx : sample_indices(state, shots, seed)) ++h[state.bitstring(idx)];
  return h;
}

}  // namespace h2vqe
