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
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "h2vqe/linalg.hpp"

namespace h2vqe {

/// Length of one Bohr radius in Angstrom (CODATA 2018). The only unit
/// conversion in the library; everything below works in atomic units.
inline constexpr double kBohrInAngstrom = 0.529177210903;

inline constexpr double angstrom_to_bohr(double a) { return a / kBohrInAngstrom; }
inline constexpr double bohr_to_angstrom(double b) { return b * kBohrInAngstrom; }

using Vec3 = std::array<double, 3>;

struct Atom {
  std::string symbol;
  int nuclear_charge = 0;
  Vec3 position{};  // Bohr
};

struct MoleculeGeometry {
  std::vector<Atom> atoms;
  int charge = 0;
  int multiplicity = 1;

  int n_electrons() const;
};

/// H2 on the z axis at +-distance/2, distance in Angstrom.
MoleculeGeometry h2_geometry(double distance_angstrom);

enum class LengthUnit { Angstrom, Bohr };

/// `H x y z` per line; blank lines and `#` comments are skipped.
MoleculeGeometry parse_geometry(std::istream& is, LengthUnit unit);

/// Contracted s-type Gaussian sum_i c_i N(a_i) exp(-a_i |r - center|^2) with
/// N(a) = (2a/pi)^{3/4}; the c_i are scaled so the function has unit norm.
struct ContractedGaussian {
  Vec3 center{};
  std::vector<double> exponents;      // Bohr^-2
  std::vector<double> coefficients;   // contraction weights

  /// Builds a unit-norm function from raw weights.
  static ContractedGaussian normalized(Vec3 center, std::vector<double> exponents,
                                       std::vector<double> weights);
};

/// One STO-3G 1s function per hydrogen atom. Other elements throw
/// UnsupportedFeature.
std::vector<ContractedGaussian> sto3g_basis(const MoleculeGeometry& geometry);

/// F0(x) = int_0^1 exp(-x t^2) dt.
double boys_f0(double x);

// Pairwise s-Gaussian integrals in atomic units.
double overlap(const ContractedGaussian& a, const ContractedGaussian& b);
double kinetic(const ContractedGaussian& a, const ContractedGaussian& b);
/// <a| -Z / |r - C| |b>
double nuclear_attraction(const ContractedGaussian& a, const ContractedGaussian& b,
                          const Vec3& nucleus, double charge);
/// (ab|cd) = int a(1) b(1) 1/r12 c(2) d(2).
double electron_repulsion(const ContractedGaussian& a, const ContractedGaussian& b,
                          const ContractedGaussian& c, const ContractedGaussian& d);

double nuclear_repulsion(const MoleculeGeometry& geometry);

struct IntegralSet {
  std::size_t n_basis = 0;
  RealMatrix overlap;
  RealMatrix kinetic;
  RealMatrix nuclear;
  /// <mn|ls> = (ml|ns), physicist order, flattened row-major.
  std::vector<double> eri;
  double e_nuc = 0.0;

  double eri_physicist(std::size_t m, std::size_t n, std::size_t l, std::size_t s) const {
    return eri[((m * n_basis + n) * n_basis + l) * n_basis + s];
  }
  /// (ml|ns) in chemist order.
  double eri_chemist(std::size_t m, std::size_t l, std::size_t n, std::size_t s) const {
    return eri_physicist(m, n, l, s);
  }
  RealMatrix core_hamiltonian() const { return kinetic + nuclear; }
};

/// Throws std::invalid_argument when two nuclei coincide.
IntegralSet compute_integrals(const std::vector<ContractedGaussian>& basis,
                              const MoleculeGeometry& geometry);

struct HartreeFockResult {
  RealMatrix mo_coefficients;             // columns are orbitals
  std::vector<double> orbital_energies;   // ascending
  double hf_total_energy = 0.0;           // includes e_nuc
  int iterations = 0;
  bool converged = false;
  std::vector<double> energy_history;     // total energy per iteration
};

struct ScfOptions {
  double energy_tol = 1e-10;
  int max_iterations = 200;
};

/// Restricted closed-shell SCF with symmetric orthogonalization and a core
/// Hamiltonian guess. Throws ConvergenceFailure<HartreeFockResult> when the
/// energy criterion is not met within max_iterations.
HartreeFockResult hartree_fock(const IntegralSet& ints, int n_electrons,
                               ScfOptions options = {});

/// Spin-orbital integrals in blocked order: spatial orbital i is mode i for
/// spin alpha and mode i + n_spatial for spin beta.
struct SpinOrbitalIntegrals {
  std::size_t n_modes = 0;
  RealMatrix h1;
  /// h2[pqrs] = int psi_p*(1) psi_q*(2) 1/r12 psi_r(2) psi_s(1), flattened.
  std::vector<double> h2;
  double h0 = 0.0;

  explicit SpinOrbitalIntegrals(std::size_t n = 0)
      : n_modes(n), h1(n, n), h2(n * n * n * n, 0.0) {}

  double& two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return h2[((p * n_modes + q) * n_modes + r) * n_modes + s];
  }
  double two_body(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return h2[((p * n_modes + q) * n_modes + r) * n_modes + s];
  }
};

/// MO transformation and spin expansion; throws InvalidState when `hf` did not
/// converge.
SpinOrbitalIntegrals spin_orbital_integrals(const IntegralSet& ints,
                                            const HartreeFockResult& hf);

/// Geometry -> basis -> integrals -> SCF -> spin-orbital integrals.
struct ElectronicStructure {
  MoleculeGeometry geometry;
  IntegralSet integrals;
  HartreeFockResult hf;
  SpinOrbitalIntegrals spin_integrals;
};

/// Closed-shell neutral molecules only; other charge/multiplicity settings
/// throw UnsupportedFeature.
ElectronicStructure run_electronic_structure(const MoleculeGeometry& geometry,
                                             ScfOptions options = {});

}  // namespace h2vqe
