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

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "h2vqe/circuit_text.hpp"
#include "h2vqe/pauli.hpp"
#include "h2vqe/scan.hpp"
#include "h2vqe/statevector.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 1;
constexpr int kExitUsage = 2;

struct VqeFlags {
  std::string optimizer = "lbfgs";
  std::size_t shots = 0;
  std::uint64_t seed = 7;
  int maxiter = 20;
  double tol = 1e-9;
};

void add_vqe_flags(CLI::App* cmd, VqeFlags& f) {
  cmd->add_option("--optimizer", f.optimizer, "lbfgs or nelder-mead")->capture_default_str();
  cmd->add_option("--shots", f.shots, "shots per Pauli term, 0 for exact expectation")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "sampling seed")->capture_default_str();
  cmd->add_option("--maxiter", f.maxiter, "optimizer iteration limit")->capture_default_str();
  cmd->add_option("--tol", f.tol, "convergence tolerance in Hartree")->capture_default_str();
}

h2vqe::VqeConfig to_config(const VqeFlags& f) {
  h2vqe::VqeConfig c;
  c.optimizer = h2vqe::parse_optimizer(f.optimizer);
  c.shots = f.shots;
  c.seed = f.seed;
  c.max_iterations = f.maxiter;
  c.convergence_tol = f.tol;
  c.validate();
  return c;
}

int cmd_scan(h2vqe::ScanSpec spec, const VqeFlags& flags) {
  spec.vqe = to_config(flags);
  spec.validate();
  std::ofstream out(spec.output_path);
  if (!out) {
    std::cerr << "error: cannot open " << spec.output_path << " for writing\n";
    return kExitUsage;
  }
  const auto rows = h2vqe::run_scan(spec);
  h2vqe::write_scan_csv(out, rows);
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing " << spec.output_path << '\n';
    return kExitUsage;
  }
  const auto s = h2vqe::summarize(rows);
  std::printf("points: %zu\n", rows.size());
  std::printf("minimum: %.6f Hartree at %.3f Angstrom\n", s.min_energy, s.min_energy_distance);
  std::printf("worst |vqe - exact|: %.3e Hartree\n", s.worst_abs_error);
  std::printf("all converged: %s\n", s.all_converged ? "yes" : "no");
  std::printf("wrote %s\n", spec.output_path.c_str());
  return s.all_converged ? kExitOk : kExitNotConverged;
}

int cmd_single(double distance, const VqeFlags& flags) {
  if (!(distance > 0.0)) {
    std::cerr << "error: --distance must be positive\n";
    return kExitUsage;
  }
  const auto config = to_config(flags);
  const auto point = h2vqe::evaluate_h2(distance, config);
  std::cout << h2vqe::single_point_report(point, config) << '\n';
  return point.vqe.converged ? kExitOk : kExitNotConverged;
}

int cmd_dump(double distance, bool electronic) {
  if (!(distance > 0.0)) {
    std::cerr << "error: --distance must be positive\n";
    return kExitUsage;
  }
  h2vqe::write_pauli_sum(std::cout, h2vqe::h2_qubit_hamiltonian(distance, !electronic));
  return kExitOk;
}

int cmd_run_circuit(const std::string& path, std::size_t shots, std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << '\n';
    return kExitUsage;
  }
  h2vqe::Circuit circuit(0);
  try {
    circuit = h2vqe::parse_circuit_text(in);
  } catch (const h2vqe::CircuitParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kExitUsage;
  }
  const auto state = h2vqe::run_circuit(circuit, h2vqe::Statevector(circuit.n_qubits()));
  if (shots == 0) {
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (std::norm(amps[i]) < 1e-24) continue;
      std::printf("|%s>  %+.6f %+.6fi  p=%.6f\n", state.bitstring(i).c_str(), amps[i].real(),
                  amps[i].imag(), std::norm(amps[i]));
    }
  } else {
    for (const auto& [bits, count] : h2vqe::sample_measurements(state, shots, seed))
      std::printf("%s %zu\n", bits.c_str(), count);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"H2 ground-state energies with a UCCSD variational eigensolver"};
  app.require_subcommand(1);

  h2vqe::ScanSpec scan_spec;
  VqeFlags scan_flags;
  auto* scan = app.add_subcommand("scan", "dissociation curve to CSV");
  scan->add_option("--dmin", scan_spec.d_min, "first distance, Angstrom")->capture_default_str();
  scan->add_option("--dmax", scan_spec.d_max, "last distance, Angstrom")->capture_default_str();
  scan->add_option("--step", scan_spec.step, "grid step, Angstrom")->capture_default_str();
  scan->add_option("--out", scan_spec.output_path, "CSV output path")->capture_default_str();
  scan->add_option("--jobs", scan_spec.jobs, "worker threads")->capture_default_str();
  add_vqe_flags(scan, scan_flags);

  double single_distance = 0.725;
  VqeFlags single_flags;
  auto* single = app.add_subcommand("single", "one distance, JSON report on stdout");
  single->add_option("--distance", single_distance, "bond length, Angstrom")
      ->capture_default_str();
  add_vqe_flags(single, single_flags);

  double dump_distance = 0.725;
  auto* dump = app.add_subcommand("dump-hamiltonian", "qubit Hamiltonian as Pauli text");
  dump->add_option("--distance", dump_distance, "bond length, Angstrom")->capture_default_str();
  bool dump_electronic = false;
  dump->add_flag("--electronic", dump_electronic, "leave nuclear repulsion out of IIII");

  std::string circuit_path;
  std::size_t circuit_shots = 0;
  std::uint64_t circuit_seed = 7;
  auto* run = app.add_subcommand("run-circuit", "execute a circuit text file");
  run->add_option("--file", circuit_path, "circuit text file")->required();
  run->add_option("--shots", circuit_shots, "0 prints amplitudes, otherwise a histogram")
      ->capture_default_str();
  run->add_option("--seed", circuit_seed, "sampling seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*scan) return cmd_scan(scan_spec, scan_flags);
    if (*single) return cmd_single(single_distance, single_flags);
    if (*dump) return cmd_dump(dump_distance, dump_electronic);
    if (*run) return cmd_run_circuit(circuit_path, circuit_shots, circuit_seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotConverged;
  }
  return kExitUsage;
}
