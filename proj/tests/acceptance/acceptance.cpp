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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "h2vqe/ansatz.hpp"
#include "h2vqe/chemistry.hpp"
#include "h2vqe/pauli.hpp"
#include "h2vqe/scan.hpp"
#include "h2vqe/vqe.hpp"
#include "json.hpp"
#include "oracles/fock.hpp"
#include "support.hpp"

using namespace h2vqe;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Run {
  int exit_code = -1;
  std::string out;
};

Run shell(const std::string& cmd) {
  Run r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Run cli(const std::string& args) { return shell(std::string("\"") + H2VQE_CLI_PATH + "\" " + args); }

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Published STO-3G H2 coefficients, electronic part only.
const std::map<std::string, double> kReferenceCoefficients{
    {"IIII", -0.807184}, {"ZIZI", 0.175106},  {"IZIZ", 0.169404},  {"IIZI", -0.230474},
    {"ZIII", -0.230474}, {"IIIZ", 0.173740},  {"IZII", 0.173740},  {"YYYY", 0.045094},
    {"XXYY", 0.045094},  {"YYXX", 0.045094},  {"XXXX", 0.045094},  {"ZIIZ", 0.166582},
    {"IZZI", 0.166582},  {"ZZII", 0.121488},  {"IIZZ", 0.121488}};

constexpr double kReferenceVqe = -1.134167;
constexpr double kReferenceEnergy = -1.117506;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome equilibrium_energy() {
  const auto t0 = Clock::now();
  const auto r = cli("single --distance 0.725 --optimizer lbfgs --maxiter 100");
  const double elapsed = seconds_since(t0);
  if (r.exit_code != 0) return {false, "single exited with " + std::to_string(r.exit_code)};
  const auto j = nlohmann::json::parse(r.out);
  const double vqe = j["vqe_hartree"].get<double>();
  const double exact =
      exact_ground_energy(h2_qubit_hamiltonian(0.725)).energy;  // independent recomputation
  const bool ok = std::abs(vqe - kReferenceVqe) < 0.01 && std::abs(vqe - exact) < 1e-6 &&
                  elapsed < 5.0;
  return {ok, fmt("vqe %.6f, |vqe - ref| %.2e, |vqe - exact| %.2e", vqe,
                  std::abs(vqe - kReferenceVqe), std::abs(vqe - exact)) +
                  fmt(", %.2f s", elapsed)};
}

Outcome reference_comparison() {
  // Default scan grid points inside the window.
  double best_d = 0.0, best_gap = 1e9, best_e = 0.0;
  for (double d : scan_grid(0.2, 2.5, 0.05)) {
    if (d < 0.70 - 1e-9 || d > 0.76 + 1e-9) continue;
    const double e = run_electronic_structure(h2_geometry(d)).hf.hf_total_energy;
    if (std::abs(e - kReferenceEnergy) < best_gap) {
      best_gap = std::abs(e - kReferenceEnergy);
      best_d = d;
      best_e = e;
    }
  }
  return {best_gap < 2e-3, fmt("HF %.6f at %.2f A, gap %.2e", best_e, best_d, best_gap)};
}

struct ScanOutput {
  bool ok = false;
  double seconds = 0.0;
  std::vector<ScanRow> rows;
  std::string error;
};

ScanOutput default_scan() {
  ScanOutput s;
  const auto path = fs::temp_directory_path() / "h2vqe_acceptance_scan.csv";
  const auto t0 = Clock::now();
  const auto r = cli("scan --maxiter 100 --out \"" + path.string() + "\"");
  s.seconds = seconds_since(t0);
  if (r.exit_code != 0) {
    s.error = "scan exited with " + std::to_string(r.exit_code);
    return s;
  }
  std::ifstream in(path);
  s.rows = read_scan_csv(in);
  s.ok = true;
  return s;
}

Outcome curve_shape(const ScanOutput& scan) {
  if (!scan.ok) return {false, scan.error};
  const auto& rows = scan.rows;
  std::size_t argmin = 0;
  for (std::size_t k = 1; k < rows.size(); ++k)
    if (rows[k].vqe_energy < rows[argmin].vqe_energy) argmin = k;
  bool unimodal = true;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (k <= argmin) unimodal = unimodal && rows[k].vqe_energy < rows[k - 1].vqe_energy;
    else unimodal = unimodal && rows[k].vqe_energy > rows[k - 1].vqe_energy;
  }
  const double d_min = rows[argmin].distance;
  const bool ok = rows.size() == 47 && scan.seconds < 60.0 && d_min >= 0.70 - 1e-9 &&
                  d_min <= 0.75 + 1e-9 && unimodal;
  return {ok, std::to_string(rows.size()) + " points" + fmt(", %.2f s, minimum at %.2f A", scan.seconds, d_min) +
                  (unimodal ? ", unimodal" : ", not unimodal")};
}

Outcome hamiltonian_structure() {
  bool kinds_ok = true, equal_ok = true;
  double best_dev = 1e9, best_d = 0.0;
  for (double d : scan_grid(0.2, 2.5, 0.05)) {
    for (bool electronic : {false, true}) {
      const auto r = cli(fmt("dump-hamiltonian --distance %.17g", d) +
                         (electronic ? " --electronic" : ""));
      if (r.exit_code != 0) return {false, "dump-hamiltonian failed" + fmt(" at %.2f", d)};
      std::istringstream is(r.out);
      const auto h = read_pauli_sum(is);
      std::map<std::string, double> got;
      for (const auto& t : h.terms()) got[t.string.to_string()] = t.coefficient.real();
      if (got.size() != 15) kinds_ok = false;
      for (const auto& [k, v] : kReferenceCoefficients)
        if (!got.count(k)) kinds_ok = false;
      if (!kinds_ok) return {false, fmt("wrong Pauli inventory at %.2f A", d)};
      const double x = got["XXXX"];
      for (const char* k : {"XXYY", "YYXX", "YYYY"})
        if (std::abs(got[k] - x) > 1e-10) equal_ok = false;
      if (electronic) {
        double dev = 0.0;
        for (const auto& [k, v] : kReferenceCoefficients) dev = std::max(dev, std::abs(got[k] - v));
        if (dev < best_dev) {
          best_dev = dev;
          best_d = d;
        }
      }
    }
  }
  return {kinds_ok && equal_ok && best_dev < 0.02,
          std::string("15 kinds at all 47 points") + (equal_ok ? ", XXXX-family equal" : ", XXXX-family unequal") +
              fmt(", best deviation %.2e at %.2f A", best_dev, best_d)};
}

Outcome oracle_equivalence(const ScanOutput& scan) {
  if (!scan.ok) return {false, scan.error};
  double worst_gap = 0.0, worst_bound = -1e9, worst_oracle = 0.0;
  bool csv_ok = true;
  for (const auto& row : scan.rows) {
    const auto es = run_electronic_structure(h2_geometry(row.distance));
    const double exact = exact_ground_energy(jordan_wigner(assemble_hamiltonian(es.spin_integrals))).energy;
    const double ci = oracle::two_electron_ground(
        testing_support::mo_integrals(es.integrals, es.hf.mo_coefficients));
    VqeConfig c;
    c.max_iterations = 100;
    const double vqe = solve_ground_state(es.spin_integrals, c).energy;
    worst_oracle = std::max(worst_oracle, std::abs(exact - ci));
    worst_bound = std::max(worst_bound, exact - std::min(vqe, es.hf.hf_total_energy));
    worst_gap = std::max(worst_gap, vqe - exact);
    // The CSV carries 6 decimals; it must agree with the recomputation.
    csv_ok = csv_ok && std::abs(row.exact_energy - ci) < 1e-6;
  }
  const bool ok = worst_bound <= 1e-9 && worst_gap < 1e-6 && worst_oracle < 1e-9 && csv_ok;
  return {ok, fmt("max(exact - min(vqe, hf)) %.2e, max(vqe - exact) %.2e, |exact - CI| %.2e",
                  worst_bound, worst_gap, worst_oracle)};
}

Outcome property_suites() {
  const std::vector<std::pair<std::string, std::string>> suites{
      {H2VQE_TEST_FERMION, "JordanWignerProperties.*"},
      {H2VQE_TEST_STATEVECTOR, "GateProperties.*"},
      {H2VQE_TEST_PAULI, "ExpectationProperties.*:SampledExpectation.*"},
      {H2VQE_TEST_VQE, "GradientProperties.*"},
      {H2VQE_TEST_CHEMISTRY, "IntegralProperties.*:Boys.*"},
  };
  const auto t0 = Clock::now();
  bool ok = true;
  std::string failed;
  for (const auto& [binary, filter] : suites) {
    const auto r = shell("\"" + binary + "\" --gtest_brief=1 --gtest_filter='" + filter + "'");
    if (r.exit_code != 0) {
      ok = false;
      failed += " " + fs::path(binary).filename().string();
    }
  }
  const double elapsed = seconds_since(t0);
  return {ok && elapsed < 30.0,
          fmt("%.2f s", elapsed) + (failed.empty() ? ", all suites green" : ", failing:" + failed)};
}

Outcome shot_noise_scaling() {
  const auto es = run_electronic_structure(h2_geometry(0.725));
  const auto problem = build_vqe_problem(es.spin_integrals, 2);
  const std::vector<double> params{0.05, -0.05, 0.11};
  Circuit full = problem.reference;
  full.append(problem.ansatz);
  std::vector<double> sd;
  for (std::size_t shots : {100u, 1000u, 10000u}) {
    std::vector<double> e;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
      e.push_back(sampled_expectation(problem.hamiltonian, full, params, shots, 1000 + seed).energy);
    double mean = 0.0;
    for (double v : e) mean += v / 50.0;
    double var = 0.0;
    for (double v : e) var += (v - mean) * (v - mean) / 49.0;
    sd.push_back(std::sqrt(var));
  }
  const double ratio = sd[0] / sd[2];  // ideal 10
  const bool ok = ratio > 5.0 && ratio < 20.0;
  return {ok, fmt("std %.2e / %.2e / %.2e", sd[0], sd[1], sd[2]) +
                  fmt(" at 1e2/1e3/1e4 shots, ratio 1e2:1e4 = %.2f", ratio)};
}

}  // namespace

int main() {
  const ScanOutput scan = default_scan();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"equilibrium energy", equilibrium_energy},
      {"reference comparison", reference_comparison},
      {"dissociation curve shape", [&] { return curve_shape(scan); }},
      {"hamiltonian structure", hamiltonian_structure},
      {"oracle equivalence", [&] { return oracle_equivalence(scan); }},
      {"property suites", property_suites},
      {"shot-noise scaling", shot_noise_scaling},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
