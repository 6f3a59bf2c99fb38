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

#include "h2vqe/scan.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "h2vqe/fermion.hpp"

namespace h2vqe {

void ScanSpec::validate() const {
  if (!(d_min > 0.0)) throw std::invalid_argument("scan: d_min must be positive");
  if (!(step > 0.0)) throw std::invalid_argument("scan: step must be positive");
  if (!(d_min <= d_max)) throw std::invalid_argument("scan: d_min must not exceed d_max");
  if (jobs < 1) throw std::invalid_argument("scan: jobs must be >= 1");
  vqe.validate();
}

std::vector<double> scan_grid(double d_min, double d_max, double step) {
  if (!(step > 0.0) || !(d_min <= d_max))
    throw std::invalid_argument("scan_grid: need step > 0 and d_min <= d_max");
  const auto count = static_cast<std::size_t>(std::floor((d_max - d_min) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t k = 0; k < count; ++k) grid[k] = d_min + static_cast<double>(k) * step;
  return grid;
}

PauliSum h2_qubit_hamiltonian(double distance_angstrom, bool include_nuclear_repulsion) {
  auto es = run_electronic_structure(h2_geometry(distance_angstrom));
  if (!include_nuclear_repulsion) es.spin_integrals.h0 = 0.0;
  return jordan_wigner(assemble_hamiltonian(es.spin_integrals));
}

PointResult evaluate_h2(double distance_angstrom, const VqeConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto es = run_electronic_structure(h2_geometry(distance_angstrom));
  const VqeProblem problem = build_vqe_problem(es.spin_integrals, 2);
  PointResult out;
  out.distance = distance_angstrom;
  out.hf_energy = es.hf.hf_total_energy;
  out.exact_energy = exact_ground_energy(problem.hamiltonian).energy;
  out.vqe = solve_ground_state(problem, config);
  out.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

ScanRow ScanRow::from(const PointResult& p) {
  ScanRow r;
  r.distance = p.distance;
  r.hf_energy = p.hf_energy;
  r.vqe_energy = p.vqe.energy;
  r.exact_energy = p.exact_energy;
  r.abs_error = std::abs(p.vqe.energy - p.exact_energy);
  r.n_evaluations = p.vqe.n_evaluations;
  r.converged = p.vqe.converged;
  return r;
}

std::vector<ScanRow> run_scan(const ScanSpec& spec) {
  spec.validate();
  const auto grid = scan_grid(spec.d_min, spec.d_max, spec.step);
  std::vector<ScanRow> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = ScanRow::from(evaluate_h2(grid[i], spec.vqe));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_workers = std::min(spec.jobs, grid.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << kScanCsvHeader << '\n';
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f,%.6f,%zu,%s\n", r.distance, r.hf_energy,
                  r.vqe_energy, r.exact_energy, r.abs_error, r.n_evaluations,
                  r.converged ? "true" : "false");
    os << buf;
  }
}

std::vector<ScanRow> read_scan_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kScanCsvHeader)
    throw std::invalid_argument("scan csv: missing or unexpected header");
  std::vector<ScanRow> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7)
      throw std::invalid_argument("scan csv line " + std::to_string(line_no) +
                                  ": expected 7 columns");
    try {
      ScanRow r;
      r.distance = std::stod(cells[0]);
      r.hf_energy = std::stod(cells[1]);
      r.vqe_energy = std::stod(cells[2]);
      r.exact_energy = std::stod(cells[3]);
      r.abs_error = std::stod(cells[4]);
      r.n_evaluations = std::stoul(cells[5]);
      if (cells[6] != "true" && cells[6] != "false") throw std::invalid_argument("converged");
      r.converged = cells[6] == "true";
      rows.push_back(r);
    } catch (const std::exception&) {
      throw std::invalid_argument("scan csv line " + std::to_string(line_no) +
                                  ": malformed value");
    }
  }
  return rows;
}

ScanSummary summarize(const std::vector<ScanRow>& rows) {
  ScanSummary s;
  s.min_energy = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) {
    if (r.vqe_energy < s.min_energy) {
      s.min_energy = r.vqe_energy;
      s.min_energy_distance = r.distance;
    }
    s.worst_abs_error = std::max(s.worst_abs_error, r.abs_error);
    s.all_converged = s.all_converged && r.converged;
  }
  return s;
}

std::string single_point_report(const PointResult& p, const VqeConfig& config) {
  nlohmann::json j;
  j["distance_angstrom"] = p.distance;
  j["hf_hartree"] = p.hf_energy;
  j["vqe_hartree"] = p.vqe.energy;
  j["exact_hartree"] = p.exact_energy;
  j["abs_error_hartree"] = std::abs(p.vqe.energy - p.exact_energy);
  j["relative_error"] = std::abs(p.vqe.energy - p.exact_energy) / std::abs(p.exact_energy);
  j["optimal_params"] = p.vqe.optimal_params;
  nlohmann::json history = nlohmann::json::array();
  for (const auto& h : p.vqe.history)
    history.push_back({{"evaluation", h.evaluation}, {"energy", h.energy}});
  j["history"] = std::move(history);
  j["n_evaluations"] = p.vqe.n_evaluations;
  j["iterations"] = p.vqe.iterations;
  j["converged"] = p.vqe.converged;
  j["optimizer"] = to_string(config.optimizer);
  j["max_iterations"] = config.max_iterations;
  j["convergence_tol"] = config.convergence_tol;
  j["shots"] = config.shots;
  j["seed"] = config.seed;
  j["wall_time_seconds"] = p.wall_time_seconds;
  return j.dump(2);
}

}  // namespace h2vqe
