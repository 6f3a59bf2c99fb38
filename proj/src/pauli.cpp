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

#include "h2vqe/pauli.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <istream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "h2vqe/errors.hpp"
#include "h2vqe/rng.hpp"

namespace h2vqe {

namespace {

constexpr std::size_t kMaxDenseQubits = 12;

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": qubit count mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

ComplexMatrix letter_matrix(char letter) {
  ComplexMatrix m(2, 2);
  switch (letter) {
    case 'I': m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 'X': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 'Y': m(0, 1) = Complex(0.0, -1.0); m(1, 0) = Complex(0.0, 1.0); break;
    case 'Z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw std::invalid_argument("letter_matrix: bad Pauli letter");
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

}  // namespace

PauliSum::PauliSum(std::size_t n_qubits, std::span<const PauliTerm> terms)
    : n_qubits_(n_qubits) {
  for (const auto& t : terms) {
    require_same_size(t.string.n_qubits(), n_qubits_, "PauliSum");
    terms_[t.string] += t.coefficient;
  }
  prune();
}

PauliSum PauliSum::identity(std::size_t n_qubits, Complex coefficient) {
  PauliSum s(n_qubits);
  s.add_term(coefficient, PauliString::identity(n_qubits));
  return s;
}

PauliSum PauliSum::from_string(const PauliString& p, Complex coefficient) {
  PauliSum s(p.n_qubits());
  s.add_term(coefficient, p);
  return s;
}

std::vector<PauliTerm> PauliSum::terms() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto& [s, c] : terms_) out.push_back({c, s});
  return out;
}

Complex PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Complex{} : it->second;
}

bool PauliSum::hermitian() const {
  for (const auto& [s, c] : terms_)
    if (std::abs(c.imag()) > kPruneThreshold) return false;
  return true;
}

PauliSum& PauliSum::add_term(Complex coefficient, const PauliString& s) {
  require_same_size(s.n_qubits(), n_qubits_, "PauliSum::add_term");
  Complex& c = terms_[s];
  c += coefficient;
  if (std::abs(c) < kPruneThreshold) terms_.erase(s);
  return *this;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  require_same_size(other.n_qubits_, n_qubits_, "PauliSum::+");
  for (const auto& [s, c] : other.terms_) terms_[s] += c;
  prune();
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  require_same_size(other.n_qubits_, n_qubits_, "PauliSum::-");
  for (const auto& [s, c] : other.terms_) terms_[s] -= c;
  prune();
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scalar) {
  for (auto& [s, c] : terms_) c *= scalar;
  prune();
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  require_same_size(a.n_qubits_, b.n_qubits_, "PauliSum::*");
  PauliSum out(a.n_qubits_);
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_) {
      const auto prod = pauli_multiply(sa, sb);
      out.terms_[prod.string] += ca * cb * prod.phase.value();
    }
  out.prune();
  return out;
}

bool PauliSum::approx_equal(const PauliSum& other, double tol) const {
  if (other.n_qubits_ != n_qubits_) return false;
  for (const auto& [s, c] : terms_)
    if (std::abs(c - other.coefficient(s)) > tol) return false;
  for (const auto& [s, c] : other.terms_)
    if (std::abs(c - coefficient(s)) > tol) return false;
  return true;
}

void PauliSum::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
}

Complex expectation(const PauliString& p, const Statevector& state) {
  require_same_size(p.n_qubits(), state.n_qubits(), "expectation");
  // <psi|P|psi> = i^{n_y} sum_i conj(psi[i ^ x]) (-1)^{|i & z|} psi[i]
  const std::uint64_t x = p.x_mask();
  const std::uint64_t z = p.z_mask();
  Complex acc{};
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const Complex term = std::conj(amps[i ^ x]) * amps[i];
    acc += (std::popcount(static_cast<std::uint64_t>(i) & z) & 1) ? -term : term;
  }
  return acc * PauliPhase{std::popcount(x & z)}.value();
}

double expectation(const PauliSum& op, const Statevector& state) {
  require_same_size(op.n_qubits(), state.n_qubits(), "expectation");
  if (!op.hermitian())
    throw std::invalid_argument("expectation: operator is not hermitian");
  Complex total{};
  for (const auto& t : op.terms()) total += t.coefficient * expectation(t.string, state);
  if (std::abs(total.imag()) > 1e-10)
    throw std::runtime_error("expectation: imaginary part " +
                             std::to_string(total.imag()) + " exceeds 1e-10");
  return total.real();
}

std::vector<Gate> measurement_basis_change(const PauliString& p) {
  std::vector<Gate> gates;
  for (std::size_t q = 0; q < p.n_qubits(); ++q) {
    switch (p.letter(q)) {
      case 'X': gates.push_back(Gate::single(GateKind::H, q)); break;
      case 'Y':
        gates.push_back(Gate::rotation(GateKind::Rx, q, std::numbers::pi / 2.0));
        break;
      default: break;
    }
  }
  return gates;
}

SampledEnergy sampled_expectation(const PauliSum& op, const Statevector& state,
                                  std::size_t shots, std::uint64_t seed) {
  require_same_size(op.n_qubits(), state.n_qubits(), "sampled_expectation");
  if (shots == 0) throw std::invalid_argument("sampled_expectation: shots must be >= 1");
  if (!op.hermitian())
    throw std::invalid_argument("sampled_expectation: operator is not hermitian");

  SampledEnergy out;
  double variance = 0.0;
  std::uint64_t stream = 0;
  for (const auto& t : op.terms()) {
    const double c = t.coefficient.real();
    if (t.string.is_identity()) {
      out.energy += c;
      continue;
    }
    Statevector rotated = state;
    for (const auto& g : measurement_basis_change(t.string)) apply_gate(rotated, g);
    const std::uint64_t support = t.string.support();
    long long parity_sum = 0;
    for (auto idx : sample_indices(rotated, shots, split_seed(seed, stream++)))
      parity_sum += (std::popcount(static_cast<std::uint64_t>(idx) & support) & 1) ? -1 : 1;
    const double mean = static_cast<double>(parity_sum) / static_cast<double>(shots);
    out.energy += c * mean;
    variance += c * c * (1.0 - mean * mean) / static_cast<double>(shots);
  }
  out.std_error = std::sqrt(std::max(variance, 0.0));
  return out;
}

SampledEnergy sampled_expectation(const PauliSum& op, const Circuit& circuit,
                                  std::span<const double> params, std::size_t shots,
                                  std::uint64_t seed) {
  const Statevector state = run_circuit(circuit, Statevector(circuit.n_qubits()), params);
  return sampled_expectation(op, state, shots, seed);
}

ComplexMatrix to_dense_matrix(const PauliSum& op) {
  const std::size_t n = op.n_qubits();
  if (n > kMaxDenseQubits)
    throw ResourceLimit("to_dense_matrix: " + std::to_string(n) +
                        " qubits exceeds the 12-qubit limit");
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim, dim);
  for (const auto& t : op.terms()) {
    // Highest qubit is the leftmost Kronecker factor.
    ComplexMatrix k(1, 1, t.coefficient);
    for (std::size_t q = n; q-- > 0;) k = kron(k, letter_matrix(t.string.letter(q)));
    m = m + k;
  }
  return m;
}

GroundState exact_ground_energy(const PauliSum& op) {
  if (!op.hermitian())
    throw std::invalid_argument("exact_ground_energy: operator is not hermitian");
  const auto eig = hermitian_eigen(to_dense_matrix(op));
  const std::size_t dim = eig.vectors.rows();
  std::vector<Complex> v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = eig.vectors(i, 0);
  return {eig.values[0], Statevector::from_amplitudes(std::move(v))};
}

PauliSum build_two_qubit_model(double d) {
  PauliSum h(2);
  for (const char* s : {"II", "XX", "YY", "ZZ"})
    h.add_term(-0.5, PauliString::from_letters(s));
  h.add_term(d, PauliString::from_letters("ZI"));
  h.add_term(d, PauliString::from_letters("IZ"));
  return h;
}

void write_pauli_sum(std::ostream& os, const PauliSum& op, int precision) {
  std::ostringstream line;
  line << std::setprecision(precision);
  for (const auto& t : op.terms()) {
    line.str({});
    line << t.coefficient.real() << ' ' << t.coefficient.imag() << ' '
         << t.string.to_string() << '\n';
    os << line.str();
  }
}

std::string to_text(const PauliSum& op, int precision) {
  std::ostringstream os;
  write_pauli_sum(os, op, precision);
  return os.str();
}

PauliSum read_pauli_sum(std::istream& is) {
  std::vector<PauliTerm> terms;
  std::optional<std::size_t> n;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double re = 0.0, im = 0.0;
    std::string letters;
    if (!(ls >> re)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::invalid_argument("pauli text line " + std::to_string(line_no) +
                                  ": expected real coefficient");
    }
    if (!(ls >> im >> letters))
      throw std::invalid_argument("pauli text line " + std::to_string(line_no) +
                                  ": expected '<re> <im> <letters>'");
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("pauli text line " + std::to_string(line_no) +
                                  ": trailing text '" + extra + "'");
    PauliString s = PauliString::from_letters(letters);
    if (n && *n != s.n_qubits())
      throw std::invalid_argument("pauli text line " + std::to_string(line_no) +
                                  ": inconsistent qubit count");
    n = s.n_qubits();
    terms.push_back({Complex(re, im), s});
  }
  return PauliSum(n.value_or(0), terms);
}

}  // namespace h2vqe
