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

#include <cmath>
#include <random>
#include <vector>

#include "h2vqe/chemistry.hpp"
#include "h2vqe/pauli.hpp"
#include "h2vqe/statevector.hpp"
#include "oracles/dense.hpp"
#include "oracles/fock.hpp"
#include "oracles/quadrature.hpp"

namespace testing_support {

inline std::vector<oracle::C> to_vector(const h2vqe::Statevector& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

inline h2vqe::Statevector from_vector(std::vector<oracle::C> v) {
  return h2vqe::Statevector::from_amplitudes(std::move(v));
}

inline h2vqe::Statevector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<oracle::C> v(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : v) {
    a = {g(rng), g(rng)};
    norm += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(norm);
  return from_vector(std::move(v));
}

inline oracle::Gaussian to_oracle(const h2vqe::ContractedGaussian& g) {
  return {g.center, g.exponents, g.coefficients};
}

inline oracle::Mat to_oracle(const h2vqe::ComplexMatrix& m) {
  oracle::Mat r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

/// Dense matrix of a PauliSum built term by term from the oracle's own
/// Kronecker products.
inline oracle::Mat dense(const h2vqe::PauliSum& op) {
  const std::size_t dim = std::size_t{1} << op.n_qubits();
  oracle::Mat m(dim);
  for (const auto& t : op.terms())
    m = m + t.coefficient * oracle::pauli_string(t.string.to_string());
  return m;
}

inline double quadratic_form(const oracle::Mat& m, const h2vqe::Statevector& s) {
  const auto v = to_vector(s);
  return std::real(oracle::inner(v, oracle::apply(m, v)));
}

/// g/u molecular-orbital integrals of H2 from the AO integral set and the
/// SCF coefficients, by explicit summation.
inline oracle::TwoOrbitalIntegrals mo_integrals(const h2vqe::IntegralSet& ints,
                                                const h2vqe::RealMatrix& c) {
  const std::size_t n = ints.n_basis;
  const h2vqe::RealMatrix h = ints.core_hamiltonian();
  auto one = [&](std::size_t i, std::size_t j) {
    double s = 0.0;
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t l = 0; l < n; ++l) s += c(m, i) * c(l, j) * h(m, l);
    return s;
  };
  auto two = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    double s = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t cc = 0; cc < n; ++cc)
          for (std::size_t d = 0; d < n; ++d)
            s += c(a, i) * c(b, j) * c(cc, k) * c(d, l) * ints.eri_chemist(a, b, cc, d);
    return s;
  };
  return {one(0, 0), one(1, 1), two(0, 0, 0, 0), two(1, 1, 1, 1),
          two(0, 0, 1, 1), two(0, 1, 0, 1), ints.e_nuc};
}

}  // namespace testing_support
