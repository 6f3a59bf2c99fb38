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

#include "h2vqe/vqe.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "h2vqe/ansatz.hpp"
#include "h2vqe/chemistry.hpp"
#include "h2vqe/fermion.hpp"
#include "h2vqe/rng.hpp"

namespace h2vqe {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace

std::string to_string(OptimizerKind kind) {
  return kind == OptimizerKind::LBFGS ? "lbfgs" : "nelder-mead";
}

OptimizerKind parse_optimizer(const std::string& name) {
  std::string n;
  for (char c : name) n += c == '_' ? '-' : static_cast<char>(std::tolower(c));
  if (n == "lbfgs" || n == "l-bfgs") return OptimizerKind::LBFGS;
  if (n == "nelder-mead" || n == "neldermead" || n == "nm") return OptimizerKind::NelderMead;
  throw std::invalid_argument("unknown optimizer '" + name + "'");
}

void VqeConfig::validate() const {
  if (!(convergence_tol > 0.0))
    throw std::invalid_argument("VqeConfig: convergence_tol must be positive");
  if (lbfgs_memory < 1) throw std::invalid_argument("VqeConfig: lbfgs_memory must be >= 1");
  if (max_iterations < 0) throw std::invalid_argument("VqeConfig: max_iterations must be >= 0");
  if (optimizer == OptimizerKind::LBFGS && shots != 0)
    throw std::invalid_argument("VqeConfig: L-BFGS requires exact expectation (shots = 0)");
}

EnergyObjective::EnergyObjective(PauliSum hamiltonian, Circuit ansatz, const Circuit& reference,
                                 std::size_t shots, std::uint64_t seed)
    : hamiltonian_(std::move(hamiltonian)),
      ansatz_(std::move(ansatz)),
      reference_state_(reference.n_qubits()),
      shots_(shots),
      seed_(seed) {
  if (!hamiltonian_.hermitian())
    throw std::invalid_argument("EnergyObjective: hamiltonian is not hermitian");
  if (hamiltonian_.n_qubits() != ansatz_.n_qubits() ||
      reference.n_qubits() != ansatz_.n_qubits())
    throw std::invalid_argument("EnergyObjective: qubit counts of hamiltonian (" +
                                std::to_string(hamiltonian_.n_qubits()) + "), ansatz (" +
                                std::to_string(ansatz_.n_qubits()) + ") and reference (" +
                                std::to_string(reference.n_qubits()) + ") differ");
  if (reference.n_parameters() != 0)
    throw std::invalid_argument("EnergyObjective: reference circuit must be parameter-free");
  reference_state_ = run_circuit(reference, Statevector(reference.n_qubits()));
}

Statevector EnergyObjective::state(std::span<const double> params) const {
  if (params.size() != ansatz_.n_parameters())
    throw std::invalid_argument("EnergyObjective: expected " +
                                std::to_string(ansatz_.n_parameters()) + " parameters, got " +
                                std::to_string(params.size()));
  return run_circuit(ansatz_, reference_state_, params);
}

double EnergyObjective::operator()(std::span<const double> params, std::size_t evaluation) const {
  const Statevector psi = state(params);
  if (shots_ == 0) return expectation(hamiltonian_, psi);
  return sampled_expectation(hamiltonian_, psi, shots_, split_seed(seed_, evaluation)).energy;
}

double EnergyObjective::exact_bound(const Circuit& bound) const {
  return expectation(hamiltonian_, run_circuit(bound, reference_state_));
}

double energy_objective(const PauliSum& hamiltonian, const Circuit& ansatz,
                        const Circuit& reference, std::span<const double> params,
                        std::size_t shots, std::uint64_t seed) {
  return EnergyObjective(hamiltonian, ansatz, reference, shots, seed)(params);
}

std::vector<double> gradient(const EnergyObjective& objective, std::span<const double> params,
                             GradientMode mode) {
  const std::size_t n = objective.n_parameters();
  if (params.size() != n)
    throw std::invalid_argument("gradient: expected " + std::to_string(n) + " parameters");
  std::vector<double> g(n, 0.0);
  switch (mode) {
    case GradientMode::ParameterShift: {
      if (objective.shots() != 0)
        throw std::invalid_argument("gradient: parameter shift needs an exact objective");
      const Circuit bound = objective.ansatz().bind(params);
      constexpr double shift = std::numbers::pi / 2.0;
      for (const auto& slot : objective.ansatz().parameter_slots()) {
        Circuit plus = bound;
        plus.offset_angle(slot.gate_index, shift);
        Circuit minus = bound;
        minus.offset_angle(slot.gate_index, -shift);
        g[slot.parameter] +=
            slot.scale * 0.5 * (objective.exact_bound(plus) - objective.exact_bound(minus));
      }
      return g;
    }
    case GradientMode::FiniteDifference: {
      constexpr double h = 1e-6;
      std::vector<double> x(params.begin(), params.end());
      for (std::size_t k = 0; k < n; ++k) {
        const double x0 = x[k];
        x[k] = x0 + h;
        const double fp = objective(x);
        x[k] = x0 - h;
        const double fm = objective(x);
        x[k] = x0;
        g[k] = (fp - fm) / (2.0 * h);
      }
      return g;
    }
  }
  throw std::invalid_argument("gradient: unknown mode");
}

VqeResult minimize_lbfgs(const Objective& f, const GradientFn& grad,
                         std::span<const double> initial, const VqeConfig& config) {
  if (!(config.convergence_tol > 0.0) || config.lbfgs_memory < 1)
    throw std::invalid_argument("minimize_lbfgs: invalid configuration");
  constexpr double c1 = 1e-4;
  constexpr double shrink = 0.5;
  constexpr int max_backtracks = 60;

  VqeResult result;
  auto eval = [&](std::span<const double> x) {
    const double v = f(x);
    result.history.push_back({result.n_evaluations++, v});
    if (result.history.size() == 1 || v < result.energy) {
      result.energy = v;
      result.optimal_params.assign(x.begin(), x.end());
    }
    return v;
  };

  const std::size_t n = initial.size();
  std::vector<double> x(initial.begin(), initial.end());
  double fx = eval(x);
  std::vector<double> g = grad(x);
  if (g.size() != n) throw std::invalid_argument("minimize_lbfgs: gradient size mismatch");

  struct Pair {
    std::vector<double> s, y;
    double rho;
  };
  std::deque<Pair> memory;
  std::vector<double> d(n), xn(n);

  for (int iter = 0;; ++iter) {
    if (n == 0 || norm(g) < config.convergence_tol) {
      result.converged = true;
      break;
    }
    if (iter >= config.max_iterations) break;

    // Two-loop recursion: d = -H g.
    std::vector<double> q = g;
    std::vector<double> alpha(memory.size());
    for (std::size_t i = memory.size(); i-- > 0;) {
      alpha[i] = memory[i].rho * dot(memory[i].s, q);
      for (std::size_t k = 0; k < n; ++k) q[k] -= alpha[i] * memory[i].y[k];
    }
    double gamma = 1.0;
    if (!memory.empty()) {
      const auto& last = memory.back();
      gamma = dot(last.s, last.y) / dot(last.y, last.y);
    }
    for (auto& v : q) v *= gamma;
    for (std::size_t i = 0; i < memory.size(); ++i) {
      const double beta = memory[i].rho * dot(memory[i].y, q);
      for (std::size_t k = 0; k < n; ++k) q[k] += memory[i].s[k] * (alpha[i] - beta);
    }
    for (std::size_t k = 0; k < n; ++k) d[k] = -q[k];
    double slope = dot(g, d);
    if (!(slope < 0.0)) {
      memory.clear();
      for (std::size_t k = 0; k < n; ++k) d[k] = -g[k];
      slope = dot(g, d);
    }

    double step = 1.0;
    double fn = fx;
    double largest_change = 0.0;
    bool accepted = false;
    for (int bt = 0; bt < max_backtracks; ++bt) {
      for (std::size_t k = 0; k < n; ++k) xn[k] = x[k] + step * d[k];
      fn = eval(xn);
      largest_change = std::max(largest_change, std::abs(fn - fx));
      if (fn <= fx + c1 * step * slope) {
        accepted = true;
        break;
      }
      step *= shrink;
    }
    if (!accepted) {
      // The objective is flat to tolerance along the descent direction.
      result.converged = largest_change < config.convergence_tol;
      break;
    }

    std::vector<double> gn = grad(xn);
    Pair p{std::vector<double>(n), std::vector<double>(n), 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      p.s[k] = xn[k] - x[k];
      p.y[k] = gn[k] - g[k];
    }
    const double sy = dot(p.s, p.y);
    if (sy > 1e-12 * norm(p.s) * norm(p.y)) {
      p.rho = 1.0 / sy;
      memory.push_back(std::move(p));
      if (memory.size() > config.lbfgs_memory) memory.pop_front();
    } else {
      // Non-positive curvature along the step: the stored pairs would keep
      // scaling steps by stale curvature, so restart from steepest descent.
      memory.clear();
    }

    const double change = fx - fn;
    x = xn;
    fx = fn;
    g = std::move(gn);
    result.iterations = static_cast<std::size_t>(iter) + 1;
    if (std::abs(change) < config.convergence_tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

VqeResult minimize_nelder_mead(const IndexedObjective& f, std::span<const double> initial,
                               const VqeConfig& config, double initial_step) {
  if (!(config.convergence_tol > 0.0))
    throw std::invalid_argument("minimize_nelder_mead: convergence_tol must be positive");
  VqeResult result;
  auto eval = [&](std::span<const double> x) {
    const double v = f(x, result.n_evaluations);
    result.history.push_back({result.n_evaluations++, v});
    if (result.history.size() == 1 || v < result.energy) {
      result.energy = v;
      result.optimal_params.assign(x.begin(), x.end());
    }
    return v;
  };

  const std::size_t n = initial.size();
  std::vector<std::vector<double>> simplex(n + 1, std::vector<double>(initial.begin(), initial.end()));
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += initial_step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);
  if (n == 0) {
    result.converged = true;
    return result;
  }

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  for (int iter = 0;; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (values[worst] - values[best] < config.convergence_tol) {
      result.converged = true;
      break;
    }
    if (iter >= config.max_iterations) break;
    result.iterations = static_cast<std::size_t>(iter) + 1;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[order[i]][k] / static_cast<double>(n);

    auto point = [&](double coeff, std::vector<double>& out) {
      for (std::size_t k = 0; k < n; ++k)
        out[k] = centroid[k] + coeff * (simplex[worst][k] - centroid[k]);
    };

    point(-1.0, trial);
    const double fr = eval(trial);
    if (fr < values[best]) {
      point(-2.0, trial2);
      const double fe = eval(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
      continue;
    }
    if (fr < values[worst]) {
      point(-0.5, trial2);
      const double fc = eval(trial2);
      if (fc <= fr) {
        simplex[worst] = trial2;
        values[worst] = fc;
        continue;
      }
    } else {
      point(0.5, trial2);
      const double fc = eval(trial2);
      if (fc < values[worst]) {
        simplex[worst] = trial2;
        values[worst] = fc;
        continue;
      }
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k)
        simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
      values[i] = eval(simplex[i]);
    }
  }
  return result;
}

VqeResult minimize_nelder_mead(const Objective& f, std::span<const double> initial,
                               const VqeConfig& config, double initial_step) {
  return minimize_nelder_mead(
      [&](std::span<const double> x, std::size_t) { return f(x); }, initial, config,
      initial_step);
}

VqeProblem build_vqe_problem(const SpinOrbitalIntegrals& ints, std::size_t n_electrons) {
  VqeProblem p;
  p.n_electrons = n_electrons;
  p.hamiltonian = jordan_wigner(assemble_hamiltonian(ints));
  p.reference = hartree_fock_circuit(ints.n_modes, n_electrons);
  p.ansatz = build_uccsd_circuit(uccsd_excitations(ints.n_modes, n_electrons), ints.n_modes);
  return p;
}

VqeResult solve_ground_state(const VqeProblem& problem, const VqeConfig& config) {
  config.validate();
  const EnergyObjective objective(problem.hamiltonian, problem.ansatz, problem.reference,
                                  config.shots, config.seed);
  const std::vector<double> initial(objective.n_parameters(), 0.0);
  if (config.optimizer == OptimizerKind::LBFGS) {
    return minimize_lbfgs(
        [&](std::span<const double> x) { return objective(x); },
        [&](std::span<const double> x) { return gradient(objective, x, config.gradient_mode); },
        initial, config);
  }
  return minimize_nelder_mead(
      [&](std::span<const double> x, std::size_t k) { return objective(x, k); }, initial,
      config);
}

VqeResult solve_ground_state(const SpinOrbitalIntegrals& ints, const VqeConfig& config,
                             std::size_t n_electrons) {
  return solve_ground_state(build_vqe_problem(ints, n_electrons), config);
}

}  // namespace h2vqe
