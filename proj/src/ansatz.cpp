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

#include "h2vqe/ansatz.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace h2vqe {

namespace {

void check_sizes(std::size_t n_modes, std::size_t n_electrons) {
  if (n_modes % 2 != 0)
    throw std::invalid_argument("ansatz: spin-orbital count must be even");
  if (n_electrons > n_modes)
    throw std::invalid_argument("ansatz: more electrons than spin orbitals");
}

std::size_t spin_of(std::size_t mode, std::size_t n_modes) { return mode / (n_modes / 2); }

void add_generator_rotations(Circuit& circuit, const FermionOperator& t, std::size_t parameter) {
  const PauliSum generator = jordan_wigner(t - hermitian_conjugate(t));
  for (const auto& term : generator.terms()) {
    if (std::abs(term.coefficient.real()) > 1e-10)
      throw std::logic_error("UCCSD generator has a non-imaginary Pauli coefficient");
    // exp(theta * i c P) = exp(-i (-2 c theta) / 2 P)
    circuit.add_parameterized(Gate::pauli_rotation(term.string, std::nullopt), parameter,
                              -2.0 * term.coefficient.imag());
  }
  circuit.declare_parameters(parameter + 1);
}

}  // namespace

std::vector<std::size_t> hartree_fock_occupied(std::size_t n_modes, std::size_t n_electrons) {
  check_sizes(n_modes, n_electrons);
  const std::size_t half = n_modes / 2;
  const std::size_t n_alpha = (n_electrons + 1) / 2;
  const std::size_t n_beta = n_electrons / 2;
  std::vector<std::size_t> occ;
  for (std::size_t i = 0; i < n_alpha; ++i) occ.push_back(i);
  for (std::size_t i = 0; i < n_beta; ++i) occ.push_back(half + i);
  return occ;
}

Circuit hartree_fock_circuit(std::size_t n_modes, std::size_t n_electrons) {
  Circuit c(n_modes);
  for (auto q : hartree_fock_occupied(n_modes, n_electrons))
    c.add(Gate::single(GateKind::X, q));
  return c;
}

ExcitationList uccsd_excitations(std::size_t n_modes, std::size_t n_electrons) {
  const auto occupied = hartree_fock_occupied(n_modes, n_electrons);
  std::vector<bool> is_occ(n_modes, false);
  for (auto o : occupied) is_occ[o] = true;
  std::vector<std::size_t> virt;
  for (std::size_t m = 0; m < n_modes; ++m)
    if (!is_occ[m]) virt.push_back(m);

  ExcitationList ex;
  for (auto i : occupied)
    for (auto a : virt)
      if (spin_of(i, n_modes) == spin_of(a, n_modes)) ex.singles.push_back({i, a});
  for (std::size_t x = 0; x < occupied.size(); ++x)
    for (std::size_t y = x + 1; y < occupied.size(); ++y)
      for (std::size_t u = 0; u < virt.size(); ++u)
        for (std::size_t v = u + 1; v < virt.size(); ++v) {
          const auto i = occupied[x], j = occupied[y], a = virt[u], b = virt[v];
          const auto s_occ = spin_of(i, n_modes) + spin_of(j, n_modes);
          const auto s_virt = spin_of(a, n_modes) + spin_of(b, n_modes);
          if (s_occ == s_virt) ex.doubles.push_back({{i, j}, {a, b}});
        }
  return ex;
}

FermionOperator excitation_operator(const SingleExcitation& ex, std::size_t n_modes) {
  FermionOperator t(n_modes);
  t.add_term(1.0, {create(ex.virtual_), annihilate(ex.occupied)});
  return t;
}

FermionOperator excitation_operator(const DoubleExcitation& ex, std::size_t n_modes) {
  FermionOperator t(n_modes);
  t.add_term(1.0, {create(ex.virtual_.first), create(ex.virtual_.second),
                   annihilate(ex.occupied.second), annihilate(ex.occupied.first)});
  return t;
}

Circuit build_uccsd_circuit(const ExcitationList& ex, std::size_t n_modes) {
  Circuit c(n_modes);
  std::size_t parameter = 0;
  for (const auto& s : ex.singles)
    add_generator_rotations(c, excitation_operator(s, n_modes), parameter++);
  for (const auto& d : ex.doubles)
    add_generator_rotations(c, excitation_operator(d, n_modes), parameter++);
  return c;
}

LoweredCircuit lower_pauli_rotations(const Circuit& circuit) {
  LoweredCircuit out{Circuit(circuit.n_qubits()), {}};
  Circuit& c = out.circuit;
  c.declare_parameters(circuit.n_parameters());

  std::map<std::size_t, ParameterSlot> slot_of;
  for (const auto& s : circuit.parameter_slots()) slot_of[s.gate_index] = s;

  const auto& gates = circuit.gates();
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    const auto slot = slot_of.find(g);
    if (gate.kind != GateKind::PauliRotation) {
      if (slot != slot_of.end())
        c.add_parameterized(gate, slot->second.parameter, slot->second.scale);
      else
        c.add(gate);
      continue;
    }
    const PauliString& p = gate.axis;
    if (p.is_identity()) {
      out.warnings.push_back("gate " + std::to_string(g) +
                             ": identity-axis rotation is a global phase; dropped");
      continue;
    }
    std::vector<std::size_t> support;
    for (std::size_t q = 0; q < p.n_qubits(); ++q)
      if ((p.support() >> q) & 1U) support.push_back(q);

    auto basis_change = [&](bool inverse) {
      for (auto q : support) {
        const char l = p.letter(q);
        if (l == 'X') c.add(Gate::single(GateKind::H, q));
        if (l == 'Y')
          c.add(Gate::rotation(GateKind::Rx, q,
                               inverse ? -std::numbers::pi / 2.0 : std::numbers::pi / 2.0));
      }
    };
    basis_change(false);
    for (std::size_t k = 0; k + 1 < support.size(); ++k)
      c.add(Gate::cnot(support[k], support[k + 1]));
    const std::size_t last = support.back();
    if (slot != slot_of.end())
      c.add_parameterized(Gate::rotation(GateKind::Rz, last, std::nullopt),
                          slot->second.parameter, slot->second.scale);
    else
      c.add(Gate::rotation(GateKind::Rz, last, gate.angle));
    for (std::size_t k = support.size() - 1; k > 0; --k)
      c.add(Gate::cnot(support[k - 1], support[k]));
    basis_change(true);
  }
  return out;
}

}  // namespace h2vqe
