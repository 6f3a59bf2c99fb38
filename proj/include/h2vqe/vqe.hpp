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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "h2vqe/pauli.hpp"
#include "h2vqe/statevector.hpp"

namespace h2vqe {

struct SpinOrbitalIntegrals;

enum class OptimizerKind { LBFGS, NelderMead };
enum class GradientMode { ParameterShift, FiniteDifference };

std::string to_string(OptimizerKind kind);
/// Accepts "lbfgs" / "nelder-mead" (case-insensitive, '_' or '-').
OptimizerKind parse_optimizer(const std::string& name);

struct VqeConfig {
  OptimizerKind optimizer = OptimizerKind::LBFGS;
  int max_iterations = 20;
  GradientMode gradient_mode = GradientMode::ParameterShift;
  double convergence_tol = 1e-9;  // Hartree
  std::size_t shots = 0;          // 0: exact expectation
  std::uint64_t seed = 7;
  std::size_t lbfgs_memory = 10;

  /// Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

struct HistoryEntry {
  std::size_t evaluation = 0;
  double energy = 0.0;
};

struct VqeResult {
  std::vector<double> optimal_params;
  double energy = 0.0;
  std::vector<HistoryEntry> history;
  std::size_t n_evaluations = 0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// E(theta) = <psi(theta)|H|psi(theta)>, psi(theta) = ansatz(theta) reference |0...0>.
/// With shots > 0 the estimate is sampled; evaluation k uses a seed derived
/// from (seed, k) so a run is deterministic per evaluation index.
class EnergyObjective {
 public:
  EnergyObjective(PauliSum hamiltonian, Circuit ansatz, const Circuit& reference,
                  std::size_t shots = 0, std::uint64_t seed = 0);

  std::size_t n_parameters() const noexcept { return ansatz_.n_parameters(); }
  const PauliSum& hamiltonian() const noexcept { return hamiltonian_; }
  const Circuit& ansatz() const noexcept { return ansatz_; }
  const Statevector& reference_state() const noexcept { return reference_state_; }
  std::size_t shots() const noexcept { return shots_; }

  Statevector state(std::span<const double> params) const;

  /// Exact or sampled energy; `evaluation` selects the sampling seed.
  double operator()(std::span<const double> params, std::size_t evaluation = 0) const;

  /// Exact energy of an already-bound circuit.
  double exact_bound(const Circuit& bound) const;

 private:
  PauliSum hamiltonian_;
  Circuit ansatz_;
  Statevector reference_state_;
  std::size_t shots_ = 0;
  std::uint64_t seed_ = 0;
};

/// Stand-alone form of EnergyObjective.
double energy_objective(const PauliSum& hamiltonian, const Circuit& ansatz,
                        const Circuit& reference, std::span<const double> params,
                        std::size_t shots = 0, std::uint64_t seed = 0);

/// Parameter-shift (per rotation, chain rule through slot scales) or central
/// differences with step 1e-6. Parameter shift requires an exact objective.
std::vector<double> gradient(const EnergyObjective& objective, std::span<const double> params,
                             GradientMode mode);

using Objective = std::function<double(std::span<const double>)>;
using GradientFn = std::function<std::vector<double>(std::span<const double>)>;

/// Limited-memory BFGS, two-loop recursion, backtracking Armijo line search
/// (c1 = 1e-4, shrink 0.5, first trial 1). Stops on gradient norm or energy
/// change below convergence_tol or on max_iterations.
VqeResult minimize_lbfgs(const Objective& f, const GradientFn& grad,
                         std::span<const double> initial, const VqeConfig& config);

/// Nelder-Mead simplex (reflect 1, expand 2, contract 1/2, shrink 1/2).
/// Objective calls receive their evaluation index so noisy objectives can
/// follow a fixed seed schedule.
using IndexedObjective = std::function<double(std::span<const double>, std::size_t)>;
VqeResult minimize_nelder_mead(const IndexedObjective& f, std::span<const double> initial,
                               const VqeConfig& config, double initial_step = 0.5);
VqeResult minimize_nelder_mead(const Objective& f, std::span<const double> initial,
                               const VqeConfig& config, double initial_step = 0.5);

/// Everything the ground-state solve builds along the way.
struct VqeProblem {
  PauliSum hamiltonian;
  Circuit reference;
  Circuit ansatz;
  std::size_t n_electrons = 0;
};

VqeProblem build_vqe_problem(const SpinOrbitalIntegrals& ints, std::size_t n_electrons);

/// assemble_hamiltonian -> jordan_wigner -> HF reference + UCCSD -> optimizer,
/// starting from all-zero amplitudes. The energy includes h0.
VqeResult solve_ground_state(const SpinOrbitalIntegrals& ints, const VqeConfig& config,
                             std::size_t n_electrons = 2);
VqeResult solve_ground_state(const VqeProblem& problem, const VqeConfig& config);

}  // namespace h2vqe
