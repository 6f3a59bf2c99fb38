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
#include <iosfwd>
#include <string>
#include <vector>

#include "h2vqe/chemistry.hpp"
#include "h2vqe/vqe.hpp"

namespace h2vqe {

/// Bond-length scan request; distances in Angstrom.
struct ScanSpec {
  double d_min = 0.2;
  double d_max = 2.5;
  double step = 0.05;
  VqeConfig vqe;
  std::string output_path = "h2_scan.csv";
  std::size_t jobs = 1;

  void validate() const;
};

/// d_min + k * step for every k with the result <= d_max (plus a small slack
/// for rounding), so a step wider than the range gives one point.
std::vector<double> scan_grid(double d_min, double d_max, double step);

/// Full single-distance calculation: SCF, exact diagonalization and VQE.
struct PointResult {
  double distance = 0.0;  // Angstrom
  double hf_energy = 0.0;
  double exact_energy = 0.0;
  VqeResult vqe;
  double wall_time_seconds = 0.0;
};

PointResult evaluate_h2(double distance_angstrom, const VqeConfig& config);

/// Jordan-Wigner qubit Hamiltonian of H2 at the given distance. Without
/// `include_nuclear_repulsion` the identity coefficient is purely electronic.
PauliSum h2_qubit_hamiltonian(double distance_angstrom, bool include_nuclear_repulsion = true);

struct ScanRow {
  double distance = 0.0;
  double hf_energy = 0.0;
  double vqe_energy = 0.0;
  double exact_energy = 0.0;
  double abs_error = 0.0;
  std::size_t n_evaluations = 0;
  bool converged = false;

  static ScanRow from(const PointResult& p);
  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// Evaluates every grid point on up to spec.jobs worker threads; rows come
/// back in distance order whatever the completion order.
std::vector<ScanRow> run_scan(const ScanSpec& spec);

inline constexpr const char* kScanCsvHeader =
    "distance_angstrom,hf_hartree,vqe_hartree,exact_hartree,abs_error_hartree,n_evals,converged";

/// Header plus one row per point, energies with 6 decimals.
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);
std::vector<ScanRow> read_scan_csv(std::istream& is);

struct ScanSummary {
  double min_energy_distance = 0.0;
  double min_energy = 0.0;
  double worst_abs_error = 0.0;
  bool all_converged = true;
};

ScanSummary summarize(const std::vector<ScanRow>& rows);

/// JSON report of one point; floats at full precision.
std::string single_point_report(const PointResult& p, const VqeConfig& config);

}  // namespace h2vqe
