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

#include "h2vqe/chemistry.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "h2vqe/errors.hpp"

namespace h2vqe {

namespace {

using std::numbers::pi;

// STO-3G hydrogen 1s (zeta = 1.24).
constexpr std::array<double, 3> kSto3gHExponents{3.42525091, 0.62391373, 0.16885540};
constexpr std::array<double, 3> kSto3gHWeights{0.15432897, 0.53532814, 0.44463454};

double distance_squared(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

double primitive_norm(double a) { return std::pow(2.0 * a / pi, 0.75); }

Vec3 weighted_center(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  return {(a * A[0] + b * B[0]) / p, (a * A[1] + b * B[1]) / p, (a * A[2] + b * B[2]) / p};
}

// Unnormalized primitive integrals, exp(-a|r-A|^2) and exp(-b|r-B|^2).
double overlap_prim(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  return std::pow(pi / p, 1.5) * std::exp(-a * b / p * distance_squared(A, B));
}

double kinetic_prim(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  const double mu = a * b / p;
  const double r2 = distance_squared(A, B);
  return mu * (3.0 - 2.0 * mu * r2) * std::pow(pi / p, 1.5) * std::exp(-mu * r2);
}

double nuclear_prim(double a, const Vec3& A, double b, const Vec3& B, const Vec3& C) {
  const double p = a + b;
  const Vec3 P = weighted_center(a, A, b, B);
  return -2.0 * pi / p * std::exp(-a * b / p * distance_squared(A, B)) *
         boys_f0(p * distance_squared(P, C));
}

double eri_prim(double a, const Vec3& A, double b, const Vec3& B, double c, const Vec3& C,
                double d, const Vec3& D) {
  const double p = a + b;
  const double q = c + d;
  const Vec3 P = weighted_center(a, A, b, B);
  const Vec3 Q = weighted_center(c, C, d, D);
  const double pref = 2.0 * std::pow(pi, 2.5) / (p * q * std::sqrt(p + q));
  return pref * std::exp(-a * b / p * distance_squared(A, B) - c * d / q * distance_squared(C, D)) *
         boys_f0(p * q / (p + q) * distance_squared(P, Q));
}

template <typename F>
double contract2(const ContractedGaussian& g1, const ContractedGaussian& g2, F&& prim) {
  double s = 0.0;
  for (std::size_t i = 0; i < g1.exponents.size(); ++i)
    for (std::size_t j = 0; j < g2.exponents.size(); ++j) {
      const double a = g1.exponents[i], b = g2.exponents[j];
      s += g1.coefficients[i] * g2.coefficients[j] * primitive_norm(a) * primitive_norm(b) *
           prim(a, b);
    }
  return s;
}

void check_s_function(const ContractedGaussian& g) {
  if (g.exponents.size() != g.coefficients.size() || g.exponents.empty())
    throw std::invalid_argument("ContractedGaussian: exponent/coefficient lists differ");
}

}  // namespace

int MoleculeGeometry::n_electrons() const {
  int z = 0;
  for (const auto& a : atoms) z += a.nuclear_charge;
  return z - charge;
}

MoleculeGeometry h2_geometry(double distance_angstrom) {
  if (!(distance_angstrom > 0.0))
    throw std::invalid_argument("h2_geometry: distance must be positive");
  const double half = angstrom_to_bohr(distance_angstrom) / 2.0;
  MoleculeGeometry g;
  g.atoms = {{"H", 1, {0.0, 0.0, -half}}, {"H", 1, {0.0, 0.0, half}}};
  return g;
}

MoleculeGeometry parse_geometry(std::istream& is, LengthUnit unit) {
  MoleculeGeometry g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string symbol;
    if (!(ls >> symbol)) continue;
    Vec3 pos{};
    if (!(ls >> pos[0] >> pos[1] >> pos[2]))
      throw std::invalid_argument("geometry line " + std::to_string(line_no) +
                                  ": expected '<symbol> x y z'");
    if (unit == LengthUnit::Angstrom)
      for (auto& c : pos) c = angstrom_to_bohr(c);
    if (symbol != "H")
      throw UnsupportedFeature("geometry line " + std::to_string(line_no) + ": element '" +
                               symbol + "' is not supported (hydrogen only)");
    g.atoms.push_back({symbol, 1, pos});
  }
  if (g.atoms.empty()) throw std::invalid_argument("geometry: no atoms");
  return g;
}

ContractedGaussian ContractedGaussian::normalized(Vec3 center, std::vector<double> exponents,
                                                  std::vector<double> weights) {
  ContractedGaussian g{center, std::move(exponents), std::move(weights)};
  check_s_function(g);
  const double self = overlap(g, g);
  for (auto& c : g.coefficients) c /= std::sqrt(self);
  return g;
}

std::vector<ContractedGaussian> sto3g_basis(const MoleculeGeometry& geometry) {
  std::vector<ContractedGaussian> basis;
  for (const auto& atom : geometry.atoms) {
    if (atom.symbol != "H" || atom.nuclear_charge != 1)
      throw UnsupportedFeature("sto3g_basis: element '" + atom.symbol +
                               "' is not supported (hydrogen only)");
    basis.push_back(ContractedGaussian::normalized(
        atom.position, {kSto3gHExponents.begin(), kSto3gHExponents.end()},
        {kSto3gHWeights.begin(), kSto3gHWeights.end()}));
  }
  return basis;
}

double boys_f0(double x) {
  if (x < 0.0) throw std::invalid_argument("boys_f0: negative argument");
  if (x < 1e-6) return 1.0 - x / 3.0 + x * x / 10.0 - x * x * x / 42.0;
  const double r = std::sqrt(x);
  return 0.5 * std::sqrt(pi) / r * std::erf(r);
}

double overlap(const ContractedGaussian& a, const ContractedGaussian& b) {
  return contract2(a, b, [&](double x, double y) {
    return overlap_prim(x, a.center, y, b.center);
  });
}

double kinetic(const ContractedGaussian& a, const ContractedGaussian& b) {
  return contract2(a, b, [&](double x, double y) {
    return kinetic_prim(x, a.center, y, b.center);
  });
}

double nuclear_attraction(const ContractedGaussian& a, const ContractedGaussian& b,
                          const Vec3& nucleus, double charge) {
  return charge * contract2(a, b, [&](double x, double y) {
           return nuclear_prim(x, a.center, y, b.center, nucleus);
         });
}

double electron_repulsion(const ContractedGaussian& a, const ContractedGaussian& b,
                          const ContractedGaussian& c, const ContractedGaussian& d) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    for (std::size_t j = 0; j < b.exponents.size(); ++j)
      for (std::size_t k = 0; k < c.exponents.size(); ++k)
        for (std::size_t l = 0; l < d.exponents.size(); ++l) {
          const double ea = a.exponents[i], eb = b.exponents[j];
          const double ec = c.exponents[k], ed = d.exponents[l];
          const double w = a.coefficients[i] * b.coefficients[j] * c.coefficients[k] *
                           d.coefficients[l] * primitive_norm(ea) * primitive_norm(eb) *
                           primitive_norm(ec) * primitive_norm(ed);
          s += w * eri_prim(ea, a.center, eb, b.center, ec, c.center, ed, d.center);
        }
  return s;
}

double nuclear_repulsion(const MoleculeGeometry& geometry) {
  double e = 0.0;
  const auto& atoms = geometry.atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      const double r = std::sqrt(distance_squared(atoms[i].position, atoms[j].position));
      if (r < 1e-8)
        throw std::invalid_argument("nuclear_repulsion: atoms " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
      e += atoms[i].nuclear_charge * atoms[j].nuclear_charge / r;
    }
  return e;
}

IntegralSet compute_integrals(const std::vector<ContractedGaussian>& basis,
                              const MoleculeGeometry& geometry) {
  for (const auto& g : basis) check_s_function(g);
  const std::size_t n = basis.size();
  IntegralSet out;
  out.n_basis = n;
  out.e_nuc = nuclear_repulsion(geometry);
  out.overlap = RealMatrix(n, n);
  out.kinetic = RealMatrix(n, n);
  out.nuclear = RealMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double s = overlap(basis[i], basis[j]);
      const double t = kinetic(basis[i], basis[j]);
      double v = 0.0;
      for (const auto& atom : geometry.atoms)
        v += nuclear_attraction(basis[i], basis[j], atom.position, atom.nuclear_charge);
      out.overlap(i, j) = out.overlap(j, i) = s;
      out.kinetic(i, j) = out.kinetic(j, i) = t;
      out.nuclear(i, j) = out.nuclear(j, i) = v;
    }

  out.eri.assign(n * n * n * n, 0.0);
  auto at = [n](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return ((a * n + b) * n + c) * n + d;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          // chemist (ij|kl) stored at physicist <ik|jl>
          out.eri[at(i, k, j, l)] = electron_repulsion(basis[i], basis[j], basis[k], basis[l]);
        }
  return out;
}

namespace {

// Closed-shell SCF state shared by the fixed-point loop and the orbital
// rotation search.
class RestrictedScf {
 public:
  RestrictedScf(const IntegralSet& ints, std::size_t n_occ)
      : ints_(ints), n_(ints.n_basis), n_occ_(n_occ), h_(ints.core_hamiltonian()),
        x_(inverse_sqrt(ints.overlap)), xt_(x_.transpose()) {}

  RealMatrix density(const RealMatrix& c) const {
    RealMatrix p(n_, n_);
    for (std::size_t m = 0; m < n_; ++m)
      for (std::size_t v = 0; v < n_; ++v) {
        double s = 0.0;
        for (std::size_t k = 0; k < n_occ_; ++k) s += c(m, k) * c(v, k);
        p(m, v) = 2.0 * s;
      }
    return p;
  }

  RealMatrix fock(const RealMatrix& p) const {
    RealMatrix f = h_;
    for (std::size_t m = 0; m < n_; ++m)
      for (std::size_t v = 0; v < n_; ++v) {
        double g = 0.0;
        for (std::size_t l = 0; l < n_; ++l)
          for (std::size_t s = 0; s < n_; ++s)
            g += p(l, s) * (ints_.eri_chemist(m, v, l, s) - 0.5 * ints_.eri_chemist(m, l, v, s));
        f(m, v) += g;
      }
    return f;
  }

  double energy(const RealMatrix& p, const RealMatrix& f) const {
    double e = 0.0;
    for (std::size_t m = 0; m < n_; ++m)
      for (std::size_t v = 0; v < n_; ++v) e += 0.5 * p(m, v) * (h_(m, v) + f(m, v));
    return e + ints_.e_nuc;
  }

  double energy_of(const RealMatrix& c) const {
    const RealMatrix p = density(c);
    return energy(p, fock(p));
  }

  // Orbitals of `f`, ascending. With `reference` set, the occupied block is
  // instead the n_occ orbitals overlapping most with the reference occupied
  // space, which keeps degenerate levels from swapping between iterations.
  void diagonalize(const RealMatrix& f, HartreeFockResult& out,
                   const RealMatrix* reference = nullptr) const {
    const auto eig = symmetric_eigen(xt_ * f * x_);
    RealMatrix c = x_ * eig.vectors;
    std::vector<double> e = eig.values;
    if (reference) {
      const RealMatrix sc = ints_.overlap * c;
      std::vector<std::pair<double, std::size_t>> weight;
      for (std::size_t k = 0; k < n_; ++k) {
        double w = 0.0;
        for (std::size_t i = 0; i < n_occ_; ++i) {
          double o = 0.0;
          for (std::size_t m = 0; m < n_; ++m) o += (*reference)(m, i) * sc(m, k);
          w += o * o;
        }
        weight.push_back({w, k});
      }
      std::stable_sort(weight.begin(), weight.end(),
                       [](const auto& a, const auto& b) { return a.first > b.first; });
      std::vector<std::size_t> order;
      for (std::size_t k = 0; k < n_; ++k) order.push_back(weight[k].second);
      std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_occ_));
      std::sort(order.begin() + static_cast<std::ptrdiff_t>(n_occ_), order.end());
      RealMatrix sorted(n_, n_);
      std::vector<double> se(n_);
      for (std::size_t k = 0; k < n_; ++k) {
        for (std::size_t m = 0; m < n_; ++m) sorted(m, k) = c(m, order[k]);
        se[k] = e[order[k]];
      }
      c = std::move(sorted);
      e = std::move(se);
    }
    out.mo_coefficients = std::move(c);
    out.orbital_energies = std::move(e);
  }

  // Fixed-point iterations from out.mo_coefficients; returns true on
  // convergence within `budget` iterations.
  bool iterate(HartreeFockResult& out, const ScfOptions& options, int budget,
               bool max_overlap) const {
    RealMatrix p = density(out.mo_coefficients);
    bool have_previous = false;
    double previous = 0.0;
    for (int it = 0; it < budget; ++it) {
      const RealMatrix f = fock(p);
      const double e = energy(p, f);
      const RealMatrix reference = out.mo_coefficients;
      diagonalize(f, out, max_overlap ? &reference : nullptr);
      p = density(out.mo_coefficients);
      ++out.iterations;
      out.hf_total_energy = e;
      out.energy_history.push_back(e);
      if (have_previous && std::abs(e - previous) < options.energy_tol) return true;
      previous = e;
      have_previous = true;
    }
    return false;
  }

  // Looks for an occupied-virtual rotation that lowers the energy. A
  // converged fixed point can be a saddle when occupied and virtual levels are
  // degenerate (for example two hydrogen atoms far apart). Rotates
  // `c` in place and returns true if the energy dropped by more than `gain`.
  bool descend_by_rotation(RealMatrix& c, double gain) const {
    bool improved = false;
    for (int sweep = 0; sweep < 8; ++sweep) {
      bool any = false;
      for (std::size_t i = 0; i < n_occ_; ++i)
        for (std::size_t a = n_occ_; a < n_; ++a) {
          auto rotated = [&](double t) {
            RealMatrix r = c;
            const double cs = std::cos(t), sn = std::sin(t);
            for (std::size_t m = 0; m < n_; ++m) {
              r(m, i) = cs * c(m, i) + sn * c(m, a);
              r(m, a) = -sn * c(m, i) + cs * c(m, a);
            }
            return r;
          };
          const double e0 = energy_of(c);
          constexpr int kSamples = 48;
          double best_t = 0.0, best_e = e0;
          for (int k = 1; k < kSamples; ++k) {
            const double t = pi * k / kSamples - pi / 2;
            const double e = energy_of(rotated(t));
            if (e < best_e) {
              best_e = e;
              best_t = t;
            }
          }
          if (best_t == 0.0) continue;
          // Golden-section refinement around the best sample.
          double lo = best_t - pi / kSamples, hi = best_t + pi / kSamples;
          const double g = (std::sqrt(5.0) - 1.0) / 2.0;
          for (int k = 0; k < 60; ++k) {
            const double t1 = hi - g * (hi - lo), t2 = lo + g * (hi - lo);
            if (energy_of(rotated(t1)) < energy_of(rotated(t2))) hi = t2;
            else lo = t1;
          }
          const double t = 0.5 * (lo + hi);
          if (energy_of(rotated(t)) < e0 - gain) {
            c = rotated(t);
            any = improved = true;
          }
        }
      if (!any) break;
    }
    return improved;
  }

 private:
  const IntegralSet& ints_;
  std::size_t n_;
  std::size_t n_occ_;
  RealMatrix h_;
  RealMatrix x_;
  RealMatrix xt_;
};

}  // namespace

HartreeFockResult hartree_fock(const IntegralSet& ints, int n_electrons, ScfOptions options) {
  const std::size_t n = ints.n_basis;
  if (n_electrons < 0 || n_electrons % 2 != 0)
    throw std::invalid_argument("hartree_fock: electron count must be even");
  if (static_cast<std::size_t>(n_electrons) > 2 * n)
    throw std::invalid_argument("hartree_fock: more electrons than spin orbitals");
  const std::size_t n_occ = static_cast<std::size_t>(n_electrons) / 2;

  const RestrictedScf scf(ints, n_occ);
  HartreeFockResult result;
  scf.diagonalize(ints.core_hamiltonian(), result);
  auto fail = [&] {
    return ConvergenceFailure<HartreeFockResult>(
        "hartree_fock: no convergence after " + std::to_string(result.iterations) +
            " iterations",
        result);
  };
  if (!scf.iterate(result, options, options.max_iterations, false)) throw fail();

  RealMatrix c = result.mo_coefficients;
  if (n_occ > 0 && scf.descend_by_rotation(c, 100 * options.energy_tol)) {
    result.mo_coefficients = c;
    if (!scf.iterate(result, options, options.max_iterations, true)) throw fail();
  }
  result.converged = true;
  return result;
}

SpinOrbitalIntegrals spin_orbital_integrals(const IntegralSet& ints,
                                            const HartreeFockResult& hf) {
  if (!hf.converged) throw InvalidState("spin_orbital_integrals: SCF did not converge");
  const std::size_t n = ints.n_basis;
  const RealMatrix& c = hf.mo_coefficients;
  const RealMatrix h_mo = c.transpose() * ints.core_hamiltonian() * c;

  // (ij|kl) in the MO basis, one index at a time.
  std::vector<double> a(n * n * n * n, 0.0), b(n * n * n * n, 0.0);
  auto at = [n](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return ((i * n + j) * n + k) * n + l;
  };
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t s = 0; s < n; ++s) a[at(m, v, l, s)] = ints.eri_chemist(m, v, l, s);
  for (int pass = 0; pass < 4; ++pass) {
    std::fill(b.begin(), b.end(), 0.0);
    // Transform the last index and rotate it to the front.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t p = 0; p < n; ++p) {
            double s = 0.0;
            for (std::size_t l = 0; l < n; ++l) s += a[at(i, j, k, l)] * c(l, p);
            b[at(p, i, j, k)] = s;
          }
    std::swap(a, b);
  }

  const std::size_t modes = 2 * n;
  SpinOrbitalIntegrals out(modes);
  out.h0 = ints.e_nuc;
  auto spatial = [n](std::size_t p) { return p % n; };
  auto spin = [n](std::size_t p) { return p / n; };
  for (std::size_t p = 0; p < modes; ++p)
    for (std::size_t q = 0; q < modes; ++q)
      out.h1(p, q) = spin(p) == spin(q) ? h_mo(spatial(p), spatial(q)) : 0.0;
  for (std::size_t p = 0; p < modes; ++p)
    for (std::size_t q = 0; q < modes; ++q)
      for (std::size_t r = 0; r < modes; ++r)
        for (std::size_t s = 0; s < modes; ++s) {
          if (spin(p) != spin(s) || spin(q) != spin(r)) continue;
          // psi_p and psi_s share electron 1, psi_q and psi_r electron 2.
          out.two_body(p, q, r, s) =
              a[at(spatial(p), spatial(s), spatial(q), spatial(r))];
        }
  return out;
}

ElectronicStructure run_electronic_structure(const MoleculeGeometry& geometry,
                                             ScfOptions options) {
  if (geometry.multiplicity != 1 || geometry.charge != 0)
    throw UnsupportedFeature("only neutral singlet molecules are supported");
  const int n_electrons = geometry.n_electrons();
  if (n_electrons % 2 != 0)
    throw UnsupportedFeature("odd electron count is not supported");
  ElectronicStructure es;
  es.geometry = geometry;
  es.integrals = compute_integrals(sto3g_basis(geometry), geometry);
  es.hf = hartree_fock(es.integrals, n_electrons, options);
  es.spin_integrals = spin_orbital_integrals(es.integrals, es.hf);
  return es;
}

}  // namespace h2vqe
