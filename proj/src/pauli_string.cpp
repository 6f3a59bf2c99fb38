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

#include "h2vqe/pauli_string.hpp"

#include <bit>
#include <stdexcept>

namespace h2vqe {

namespace {

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask) {
  if (n_qubits > kMaxQubits)
    throw std::invalid_argument("PauliString: more than 64 qubits");
  if (((x_mask | z_mask) & ~low_mask(n_qubits)) != 0)
    throw std::invalid_argument("PauliString: mask exceeds qubit count");
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit,
                                char letter) {
  if (qubit >= n_qubits)
    throw std::invalid_argument("PauliString: qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (letter) {
    case 'I': return {n_qubits, 0, 0};
    case 'X': return {n_qubits, bit, 0};
    case 'Y': return {n_qubits, bit, bit};
    case 'Z': return {n_qubits, 0, bit};
    default: throw std::invalid_argument(std::string("PauliString: bad letter ") + letter);
  }
}

PauliString PauliString::from_letters(std::string_view letters) {
  const std::size_t n = letters.size();
  if (n > kMaxQubits) throw std::invalid_argument("PauliString: more than 64 qubits");
  std::uint64_t x = 0, z = 0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t qubit = n - 1 - pos;
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    switch (letters[pos]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw std::invalid_argument("PauliString: bad letter '" +
                                    std::string(1, letters[pos]) + "'");
    }
  }
  return {n, x, z};
}

char PauliString::letter(std::size_t qubit) const {
  if (qubit >= n_qubits_) throw std::invalid_argument("PauliString: qubit out of range");
  const bool x = (x_ >> qubit) & 1U;
  const bool z = (z_ >> qubit) & 1U;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::to_string() const {
  std::string s(n_qubits_, 'I');
  for (std::size_t q = 0; q < n_qubits_; ++q) s[n_qubits_ - 1 - q] = letter(q);
  return s;
}

std::complex<double> PauliPhase::value() const {
  switch (power & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliProduct pauli_multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("pauli_multiply: qubit count mismatch");
  // Write each Pauli as i^{x&z} X^x Z^z. Moving Z^{z_a} past X^{x_b} costs
  // (-1)^{popcount(z_a & x_b)}; the product's own Y count is divided back out.
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  int power = std::popcount(a.x_mask() & a.z_mask()) +
              std::popcount(b.x_mask() & b.z_mask()) +
              2 * std::popcount(a.z_mask() & b.x_mask()) -
              std::popcount(x & z);
  power = ((power % 4) + 4) % 4;
  return {PauliPhase{power}, PauliString(a.n_qubits(), x, z)};
}

}  // namespace h2vqe
