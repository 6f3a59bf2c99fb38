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

#include "h2vqe/fermion.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "h2vqe/chemistry.hpp"

namespace h2vqe {

FermionOperator& FermionOperator::add_term(FermionTerm term) {
  for (const auto& op : term.ladder)
    if (op.mode >= n_modes_)
      throw std::invalid_argument("FermionOperator: mode " + std::to_string(op.mode) +
                                  " out of range for " + std::to_string(n_modes_) +
                                  " modes");
  terms_.push_back(std::move(term));
  return *this;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  if (other.n_modes_ != n_modes_)
    throw std::invalid_argument("FermionOperator: mode count mismatch");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

FermionOperator& FermionOperator::operator*=(Complex scalar) {
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

FermionOperator hermitian_conjugate(const FermionOperator& op) {
  FermionOperator out(op.n_modes());
  for (const auto& t : op.terms()) {
    FermionTerm c{std::conj(t.coefficient), {}};
    c.ladder.reserve(t.ladder.size());
    for (auto it = t.ladder.rbegin(); it != t.ladder.rend(); ++it)
      c.ladder.push_back({it->mode, !it->dagger});
    out.add_term(std::move(c));
  }
  return out;
}

PauliSum jordan_wigner(const LadderOp& op, std::size_t n_modes) {
  if (op.mode >= n_modes)
    throw std::invalid_argument("jordan_wigner: mode " + std::to_string(op.mode) +
                                " out of range for " + std::to_string(n_modes) + " modes");
  if (n_modes > PauliString::kMaxQubits)
    throw std::invalid_argument("jordan_wigner: more than 64 modes");
  const std::uint64_t bit = std::uint64_t{1} << op.mode;
  const std::uint64_t z_string = bit - 1;  // qubits j < n
  // prod_{j<n} (-Z_j) = (-1)^n Z_0 ... Z_{n-1}
  const double sign = (op.mode % 2 == 0) ? 1.0 : -1.0;
  const Complex y_coeff = op.dagger ? Complex(0.0, -0.5) : Complex(0.0, 0.5);
  PauliSum out(n_modes);
  out.add_term(0.5 * sign, PauliString(n_modes, bit, z_string));
  out.add_term(y_coeff * sign, PauliString(n_modes, bit, z_string | bit));
  return out;
}

PauliSum jordan_wigner(const FermionOperator& op) {
  if (op.n_modes() == 0) throw std::invalid_argument("jordan_wigner: no modes");
  const std::size_t n = op.n_modes();
  std::map<std::pair<std::size_t, bool>, PauliSum> cache;
  auto mapped = [&](const LadderOp& l) -> const PauliSum& {
    auto key = std::make_pair(l.mode, l.dagger);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, jordan_wigner(l, n)).first;
    return it->second;
  };

  PauliSum out(n);
  for (const auto& t : op.terms()) {
    PauliSum product = PauliSum::identity(n, t.coefficient);
    for (const auto& l : t.ladder) {
      product = product * mapped(l);
      if (product.empty()) break;
    }
    out += product;
  }
  return out;
}

FermionOperator assemble_hamiltonian(const SpinOrbitalIntegrals& ints) {
  const std::size_t n = ints.n_modes;
  constexpr double tol = 1e-10;
  if (ints.h1.rows() != n || ints.h1.cols() != n || ints.h2.size() != n * n * n * n)
    throw std::invalid_argument("assemble_hamiltonian: tensor shapes do not match n_modes");

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (std::abs(ints.h1(p, q) - ints.h1(q, p)) > tol)
        throw std::invalid_argument("assemble_hamiltonian: h1 is not hermitian");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = ints.two_body(p, q, r, s);
          if (std::abs(v - ints.two_body(q, p, s, r)) > tol ||
              std::abs(v - ints.two_body(s, r, q, p)) > tol)
            throw std::invalid_argument(
                "assemble_hamiltonian: h2 violates the two-electron integral symmetry");
        }

  FermionOperator h(n);
  if (ints.h0 != 0.0) h.add_term(ints.h0, {});
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (ints.h1(p, q) != 0.0) h.add_term(ints.h1(p, q), {create(p), annihilate(q)});
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = ints.two_body(p, q, r, s);
          if (v != 0.0)
            h.add_term(0.5 * v, {create(p), create(q), annihilate(r), annihilate(s)});
        }
  return h;
}

}  // namespace h2vqe
