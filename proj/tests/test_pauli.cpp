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

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "h2vqe/errors.hpp"
#include "h2vqe/pauli.hpp"
#include "support.hpp"

using namespace h2vqe;
using testing_support::dense;
using testing_support::quadratic_form;
using testing_support::random_state;

namespace {

PauliString ps(const char* letters) { return PauliString::from_letters(letters); }

// Published STO-3G H2 qubit Hamiltonian, electronic part only.
PauliSum reference_h2() {
  PauliSum h(4);
  h.add_term(-0.807184, ps("IIII"));
  h.add_term(0.175106, ps("ZIZI"));
  h.add_term(0.169404, ps("IZIZ"));
  h.add_term(-0.230474, ps("IIZI"));
  h.add_term(-0.230474, ps("ZIII"));
  h.add_term(0.173740, ps("IIIZ"));
  h.add_term(0.173740, ps("IZII"));
  for (const char* s : {"YYYY", "XXYY", "YYXX", "XXXX"}) h.add_term(0.045094, ps(s));
  h.add_term(0.166582, ps("ZIIZ"));
  h.add_term(0.166582, ps("IZZI"));
  h.add_term(0.121488, ps("ZZII"));
  h.add_term(0.121488, ps("IIZZ"));
  return h;
}

PauliString random_string(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
  return PauliString(n, mask(rng), mask(rng));
}

PauliSum random_sum(std::size_t n, std::size_t terms, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  PauliSum s(n);
  for (std::size_t k = 0; k < terms; ++k) s.add_term(g(rng), random_string(n, rng));
  return s;
}

}  // namespace

TEST(PauliString, LettersAndMasks) {
  const auto p = ps("XYZI");
  EXPECT_EQ(p.n_qubits(), 4u);
  EXPECT_EQ(p.letter(3), 'X');
  EXPECT_EQ(p.letter(2), 'Y');
  EXPECT_EQ(p.letter(1), 'Z');
  EXPECT_EQ(p.letter(0), 'I');
  EXPECT_EQ(p.x_mask(), 0b1100u);
  EXPECT_EQ(p.z_mask(), 0b0110u);
  EXPECT_EQ(p.to_string(), "XYZI");
  EXPECT_TRUE(PauliString::identity(3).is_identity());
  EXPECT_THROW(PauliString(2, 0b100, 0), std::invalid_argument);
  EXPECT_THROW(ps("XQ"), std::invalid_argument);
}

TEST(PauliMultiply, SelfInverse) {
  const auto r = pauli_multiply(ps("X"), ps("X"));
  EXPECT_EQ(r.phase.power, 0);
  EXPECT_TRUE(r.string.is_identity());
}

TEST(PauliMultiply, XTimesYIsIZ) {
  const auto r = pauli_multiply(ps("X"), ps("Y"));
  EXPECT_EQ(r.phase.value(), Complex(0.0, 1.0));
  EXPECT_EQ(r.string, ps("Z"));
}

TEST(PauliMultiply, DisjointSupportsCommute) {
  const auto r = pauli_multiply(ps("ZI"), ps("IZ"));
  EXPECT_EQ(r.phase.value(), Complex(1.0));
  EXPECT_EQ(r.string, ps("ZZ"));
}

TEST(PauliMultiply, SizeMismatchThrows) {
  EXPECT_THROW(pauli_multiply(ps("X"), ps("XX")), std::invalid_argument);
}

TEST(PauliMultiply, MatchesDenseProducts) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_string(3, rng);
    const auto b = random_string(3, rng);
    const auto r = pauli_multiply(a, b);
    const auto expected =
        oracle::pauli_string(a.to_string()) * oracle::pauli_string(b.to_string());
    const auto got = r.phase.value() * oracle::pauli_string(r.string.to_string());
    ASSERT_LT(oracle::max_abs_diff(expected, got), 1e-15);
  }
}

TEST(PauliMultiply, Associative) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_string(5, rng), b = random_string(5, rng), c = random_string(5, rng);
    const auto ab = pauli_multiply(a, b);
    const auto ab_c = pauli_multiply(ab.string, c);
    const auto bc = pauli_multiply(b, c);
    const auto a_bc = pauli_multiply(a, bc.string);
    EXPECT_EQ(ab_c.string, a_bc.string);
    EXPECT_EQ((ab.phase.power + ab_c.phase.power) % 4, (bc.phase.power + a_bc.phase.power) % 4);
  }
}

TEST(PauliMultiply, DistinctSingleQubitPaulisAnticommute) {
  for (const char* a : {"X", "Y", "Z"})
    for (const char* b : {"X", "Y", "Z"}) {
      if (a[0] == b[0]) continue;
      const auto ab = pauli_multiply(ps(a), ps(b));
      const auto ba = pauli_multiply(ps(b), ps(a));
      EXPECT_EQ(ab.string, ba.string);
      EXPECT_EQ(ab.phase.value(), -ba.phase.value()) << a << b;
    }
}

TEST(PauliSum, MergesAndPrunes) {
  PauliSum s(2);
  s.add_term(0.5, ps("XZ")).add_term(0.25, ps("XZ")).add_term(1e-13, ps("YY"));
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.coefficient(ps("XZ")), Complex(0.75));
  s.add_term(-0.75, ps("XZ"));
  EXPECT_TRUE(s.empty());
}

TEST(PauliSum, HermitianMeansRealCoefficients) {
  PauliSum s(1);
  s.add_term(Complex(1.0, 1e-13), ps("X"));
  EXPECT_TRUE(s.hermitian());
  s.add_term(Complex(0.0, 1e-6), ps("Z"));
  EXPECT_FALSE(s.hermitian());
}

TEST(PauliSum, CanonicalOrderIsZThenX) {
  const auto terms = reference_h2().terms();
  for (std::size_t k = 1; k < terms.size(); ++k) {
    const auto& a = terms[k - 1].string;
    const auto& b = terms[k].string;
    EXPECT_TRUE(a.z_mask() < b.z_mask() || (a.z_mask() == b.z_mask() && a.x_mask() < b.x_mask()));
  }
}

TEST(PauliSum, ProductMatchesDense) {
  std::mt19937_64 rng(8);
  const auto a = random_sum(3, 5, rng);
  const auto b = random_sum(3, 4, rng);
  EXPECT_LT(oracle::max_abs_diff(dense(a * b), dense(a) * dense(b)), 1e-12);
}

TEST(Expectation, ZOnZero) {
  EXPECT_DOUBLE_EQ(expectation(PauliSum::from_string(ps("Z")), Statevector(1)), 1.0);
}

TEST(Expectation, XOnPlus) {
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(expectation(PauliSum::from_string(ps("X")), Statevector::from_amplitudes({r, r})),
              1.0, 1e-15);
}

TEST(Expectation, ReferenceHamiltonianOnHartreeFockState) {
  const std::array bits{0, 1, 0, 1};
  const auto hf = init_basis_state(4, bits);
  const auto h = reference_h2();
  const double want = quadratic_form(dense(h), hf);
  EXPECT_NEAR(expectation(h, hf), want, 1e-12);
  // Diagonal terms only: Z_k is -1 on the occupied qubits 0 and 2.
  const double by_hand = -0.807184 + 0.175106 + 0.169404 - 2 * 0.230474 - 2 * 0.173740 -
                         2 * 0.166582 - 2 * 0.121488;
  EXPECT_NEAR(want, by_hand, 1e-12);
}

TEST(Expectation, NonHermitianThrows) {
  PauliSum s(1);
  s.add_term(Complex(0.0, 1.0), ps("X"));
  EXPECT_THROW(expectation(s, Statevector(1)), std::invalid_argument);
  EXPECT_THROW(expectation(PauliSum(2), Statevector(1)), std::invalid_argument);
}

TEST(ExpectationProperties, KernelMatchesDenseQuadraticForm) {
  std::mt19937_64 rng(10);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto op = random_sum(n, 2 * n + 3, rng);
      const auto psi = random_state(n, rng);
      EXPECT_NEAR(expectation(op, psi), quadratic_form(dense(op), psi), 1e-10);
    }
  }
}

TEST(ExpectationProperties, Linear) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto A = random_sum(4, 6, rng);
    const auto B = random_sum(4, 6, rng);
    const auto psi = random_state(4, rng);
    const double a = 0.7, b = -1.9;
    EXPECT_NEAR(expectation(a * A + b * B, psi),
                a * expectation(A, psi) + b * expectation(B, psi), 1e-10);
  }
}

TEST(ExpectationProperties, VariationalBound) {
  std::mt19937_64 rng(14);
  const auto h = reference_h2();
  const double e0 = exact_ground_energy(h).energy;
  for (int trial = 0; trial < 200; ++trial)
    EXPECT_GE(expectation(h, random_state(4, rng)), e0 - 1e-12);
}

TEST(DenseMatrix, SingleZ) {
  const auto m = to_dense_matrix(PauliSum::from_string(ps("Z")));
  EXPECT_EQ(m(0, 0), Complex(1.0));
  EXPECT_EQ(m(1, 1), Complex(-1.0));
  EXPECT_EQ(m(0, 1), Complex(0.0));
}

TEST(DenseMatrix, CnotFromPaulis) {
  PauliSum c(2);
  c.add_term(0.5, ps("II")).add_term(0.5, ps("ZI")).add_term(0.5, ps("IX")).add_term(-0.5, ps("ZX"));
  const auto m = testing_support::to_oracle(to_dense_matrix(c));
  EXPECT_LT(oracle::max_abs_diff(m, oracle::cnot(1, 0, 2)), 1e-15);
}

TEST(DenseMatrix, EmptySumIsZero) {
  const auto m = to_dense_matrix(PauliSum(2));
  for (auto v : m.data()) EXPECT_EQ(v, Complex(0.0));
}

TEST(DenseMatrix, QubitLimit) {
  EXPECT_THROW(to_dense_matrix(PauliSum::identity(13)), ResourceLimit);
}

TEST(ExactGround, SingleZ) {
  const auto g = exact_ground_energy(PauliSum::from_string(ps("Z")));
  EXPECT_NEAR(g.energy, -1.0, 1e-14);
  EXPECT_NEAR(std::abs(g.state[1]), 1.0, 1e-14);
}

TEST(ExactGround, TwoQubitModelAtZeroCoupling) {
  // XX + YY + ZZ is +1 on the triplet and -3 on the singlet, so the spectrum
  // is {-1, -1, -1, +1}: the ground level is the triplet.
  const auto h = build_two_qubit_model(0.0);
  const auto g = exact_ground_energy(h);
  EXPECT_NEAR(g.energy, -1.0, 1e-12);
  EXPECT_NEAR(g.state.norm_squared(), 1.0, 1e-12);
  const auto m = dense(h);
  const auto v = testing_support::to_vector(g.state);
  const auto hv = oracle::apply(m, v);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LT(std::abs(hv[i] + v[i]), 1e-12);
  const double r = 1.0 / std::sqrt(2.0);
  const auto singlet = Statevector::from_amplitudes({0.0, r, -r, 0.0});
  EXPECT_NEAR(expectation(h, singlet), 1.0, 1e-12);
}

TEST(ExactGround, NonHermitianThrows) {
  PauliSum s(1);
  s.add_term(Complex(0.0, 2.0), ps("Z"));
  EXPECT_THROW(exact_ground_energy(s), std::invalid_argument);
}

TEST(TwoQubitModel, Coefficients) {
  const auto h0 = build_two_qubit_model(0.0);
  EXPECT_EQ(h0.size(), 4u);
  for (const auto& t : h0.terms()) EXPECT_EQ(t.coefficient, Complex(-0.5));
  const auto h1 = build_two_qubit_model(1.0);
  EXPECT_EQ(h1.size(), 6u);
  EXPECT_EQ(h1.coefficient(ps("ZI")), Complex(1.0));
  EXPECT_EQ(h1.coefficient(ps("IZ")), Complex(1.0));
  EXPECT_TRUE(build_two_qubit_model(-3.7).hermitian());
}

TEST(SampledExpectation, IdentityIsExact) {
  const auto r = sampled_expectation(PauliSum::identity(2, 1.25), Statevector(2), 10, 1);
  EXPECT_EQ(r.energy, 1.25);
  EXPECT_EQ(r.std_error, 0.0);
}

TEST(SampledExpectation, DeterministicOutcome) {
  Circuit c(1);
  c.add(Gate::single(GateKind::X, 0));
  const auto r = sampled_expectation(PauliSum::from_string(ps("Z")), c, {}, 1000, 3);
  EXPECT_EQ(r.energy, -1.0);
  EXPECT_EQ(r.std_error, 0.0);
}

TEST(SampledExpectation, BasisChangeDiagonalizesEachLetter) {
  // U P U^dagger must be diagonal with the parity sign pattern of Z on the
  // same support.
  for (const char* letters : {"X", "Y", "XY", "ZYX", "YIYX"}) {
    const auto p = ps(letters);
    const std::size_t n = p.n_qubits();
    oracle::Mat u = oracle::Mat::eye(std::size_t{1} << n);
    for (const auto& g : measurement_basis_change(p)) {
      oracle::Mat one;
      if (g.kind == GateKind::H) one = oracle::hadamard();
      else one = oracle::rx(*g.angle);
      u = oracle::embed(one, g.targets[0], n) * u;
    }
    const auto conj = u * oracle::pauli_string(letters) * oracle::dagger(u);
    std::string zs(letters);
    for (auto& ch : zs)
      if (ch != 'I') ch = 'Z';
    EXPECT_LT(oracle::max_abs_diff(conj, oracle::pauli_string(zs)), 1e-12) << letters;
  }
}

TEST(SampledExpectation, ReproducibleAndUnbiased) {
  std::mt19937_64 rng(21);
  const auto h = reference_h2();
  const auto psi = random_state(4, rng);
  const double exact = expectation(h, psi);
  const auto a = sampled_expectation(h, psi, 500, 99);
  const auto b = sampled_expectation(h, psi, 500, 99);
  EXPECT_EQ(a.energy, b.energy);
  EXPECT_EQ(a.std_error, b.std_error);

  double sum = 0.0, se2 = 0.0;
  const int runs = 50;
  for (int s = 0; s < runs; ++s) {
    const auto r = sampled_expectation(h, psi, 500, 1000 + s);
    sum += r.energy;
    se2 += r.std_error * r.std_error;
  }
  const double mean = sum / runs;
  const double sigma_of_mean = std::sqrt(se2 / runs) / std::sqrt(runs);
  EXPECT_LT(std::abs(mean - exact), 3 * sigma_of_mean);
}

TEST(SampledExpectation, ErrorShrinksWithShots) {
  std::mt19937_64 rng(22);
  const auto h = reference_h2();
  Circuit c(4);
  c.add(Gate::single(GateKind::X, 0)).add(Gate::single(GateKind::X, 2));
  c.add(Gate::single(GateKind::H, 1)).add(Gate::cnot(1, 3));
  const double exact = expectation(h, run_circuit(c, Statevector(4)));
  std::vector<double> rms;
  for (std::size_t shots : {100u, 1000u, 10000u}) {
    double acc = 0.0;
    for (int s = 0; s < 40; ++s) {
      const double e = sampled_expectation(h, c, {}, shots, 500 + s).energy;
      acc += (e - exact) * (e - exact);
    }
    rms.push_back(std::sqrt(acc / 40));
  }
  // sqrt(10) per decade, allow a factor of two either way.
  for (std::size_t k = 1; k < rms.size(); ++k) {
    const double ratio = rms[k - 1] / rms[k];
    EXPECT_GT(ratio, std::sqrt(10.0) / 2);
    EXPECT_LT(ratio, std::sqrt(10.0) * 2);
  }
}

TEST(SampledExpectation, ZeroShotsRejected) {
  EXPECT_THROW(sampled_expectation(reference_h2(), Statevector(4), 0, 1), std::invalid_argument);
}

TEST(PauliText, RoundTrip) {
  const auto h = reference_h2();
  std::istringstream in(to_text(h));
  const auto back = read_pauli_sum(in);
  EXPECT_TRUE(back.approx_equal(h, 0.0));
  EXPECT_EQ(back.size(), h.size());
}

TEST(PauliText, ParsesCommentsAndRejectsGarbage) {
  std::istringstream ok("# header\n-0.807184 0.0 IIII\n\n0.5 0 XZYI  # trailing\n");
  const auto s = read_pauli_sum(ok);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.coefficient(ps("XZYI")), Complex(0.5));
  std::istringstream bad("0.5 0 XX\n0.1 0 XYZ\n");
  EXPECT_THROW(read_pauli_sum(bad), std::invalid_argument);
  std::istringstream bad2("0.5 XX\n");
  EXPECT_THROW(read_pauli_sum(bad2), std::invalid_argument);
}

TEST(SampledExpectation, ThreeSigmaAtTenThousandShots) {
  std::mt19937_64 rng(23);
  const auto h = reference_h2();
  for (int trial = 0; trial < 5; ++trial) {
    const auto psi = random_state(4, rng);
    const double exact = expectation(h, psi);
    const auto r = sampled_expectation(h, psi, 10000, 700 + trial);
    EXPECT_GT(r.std_error, 0.0);
    EXPECT_LT(std::abs(r.energy - exact), 3 * r.std_error);
  }
}
