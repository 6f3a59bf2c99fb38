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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "h2vqe/ansatz.hpp"
#include "h2vqe/chemistry.hpp"
#include "h2vqe/circuit_text.hpp"
#include "h2vqe/errors.hpp"
#include "h2vqe/pauli.hpp"
#include "h2vqe/scan.hpp"
#include "h2vqe/vqe.hpp"

namespace py = pybind11;
using namespace h2vqe;

namespace {

py::array_t<std::complex<double>> amplitudes(const Statevector& s) {
  const auto a = s.amplitudes();
  return py::array_t<std::complex<double>>(
      py::array::ShapeContainer{static_cast<py::ssize_t>(a.size())}, a.data());
}

py::dict point_dict(const PointResult& p) {
  py::dict d;
  d["distance_angstrom"] = p.distance;
  d["hf_hartree"] = p.hf_energy;
  d["vqe_hartree"] = p.vqe.energy;
  d["exact_hartree"] = p.exact_energy;
  d["abs_error_hartree"] = std::abs(p.vqe.energy - p.exact_energy);
  d["optimal_params"] = p.vqe.optimal_params;
  std::vector<double> history;
  for (const auto& h : p.vqe.history) history.push_back(h.energy);
  d["history"] = history;
  d["n_evaluations"] = p.vqe.n_evaluations;
  d["iterations"] = p.vqe.iterations;
  d["converged"] = p.vqe.converged;
  d["wall_time_seconds"] = p.wall_time_seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "H2 ground-state energies by VQE on a statevector simulator";

  py::register_exception<CircuitParseError>(m, "CircuitParseError", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_MemoryError);
  py::register_exception<UnsupportedFeature>(m, "UnsupportedFeature", PyExc_NotImplementedError);

  py::class_<PauliSum>(m, "PauliSum")
      .def_property_readonly("n_qubits", &PauliSum::n_qubits)
      .def("__len__", &PauliSum::size)
      .def("terms",
           [](const PauliSum& s) {
             std::vector<std::pair<std::string, std::complex<double>>> out;
             for (const auto& t : s.terms()) out.emplace_back(t.string.to_string(), t.coefficient);
             return out;
           },
           "List of (letters, coefficient), letters highest qubit first.")
      .def("coefficient",
           [](const PauliSum& s, const std::string& letters) {
             return s.coefficient(PauliString::from_letters(letters));
           })
      .def("to_dense",
           [](const PauliSum& s) {
             const auto mat = to_dense_matrix(s);
             const auto n = static_cast<py::ssize_t>(mat.rows());
             py::array_t<std::complex<double>> out({n, n});
             auto v = out.mutable_unchecked<2>();
             for (py::ssize_t i = 0; i < n; ++i)
               for (py::ssize_t j = 0; j < n; ++j)
                 v(i, j) = mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
             return out;
           })
      .def("expectation",
           [](const PauliSum& s, const std::vector<std::complex<double>>& state) {
             return expectation(s, Statevector::from_amplitudes(state));
           })
      .def("__str__", [](const PauliSum& s) { return to_text(s); })
      .def("__repr__", [](const PauliSum& s) {
        return "<PauliSum " + std::to_string(s.n_qubits()) + " qubits, " +
               std::to_string(s.size()) + " terms>";
      });

  py::class_<VqeConfig>(m, "VqeConfig")
      .def(py::init<>())
      .def_property(
          "optimizer", [](const VqeConfig& c) { return to_string(c.optimizer); },
          [](VqeConfig& c, const std::string& name) { c.optimizer = parse_optimizer(name); })
      .def_readwrite("max_iterations", &VqeConfig::max_iterations)
      .def_readwrite("convergence_tol", &VqeConfig::convergence_tol)
      .def_readwrite("shots", &VqeConfig::shots)
      .def_readwrite("seed", &VqeConfig::seed)
      .def("validate", &VqeConfig::validate);

  m.def("hamiltonian", &h2_qubit_hamiltonian, py::arg("distance_angstrom"),
        py::arg("include_nuclear_repulsion") = true,
        "Jordan-Wigner qubit Hamiltonian of H2 in STO-3G.");

  m.def("parse_pauli_sum", [](const std::string& text) {
    std::istringstream is(text);
    return read_pauli_sum(is);
  });

  m.def("hartree_fock_energy", [](double distance) {
    return run_electronic_structure(h2_geometry(distance)).hf.hf_total_energy;
  }, py::arg("distance_angstrom"));

  m.def("exact_ground_energy",
        [](const PauliSum& h) { return exact_ground_energy(h).energy; });

  m.def("single_point",
        [](double distance, const VqeConfig& config) {
          config.validate();
          if (!(distance > 0.0)) throw std::invalid_argument("distance must be positive");
          PointResult p;
          {
            py::gil_scoped_release release;
            p = evaluate_h2(distance, config);
          }
          return point_dict(p);
        },
        py::arg("distance_angstrom"), py::arg("config") = VqeConfig{});

  m.def("scan",
        [](double d_min, double d_max, double step, const VqeConfig& config, std::size_t jobs) {
          ScanSpec spec;
          spec.d_min = d_min;
          spec.d_max = d_max;
          spec.step = step;
          spec.vqe = config;
          spec.jobs = jobs;
          std::vector<ScanRow> rows;
          {
            py::gil_scoped_release release;
            rows = run_scan(spec);
          }
          py::list out;
          for (const auto& r : rows) {
            py::dict d;
            d["distance_angstrom"] = r.distance;
            d["hf_hartree"] = r.hf_energy;
            d["vqe_hartree"] = r.vqe_energy;
            d["exact_hartree"] = r.exact_energy;
            d["abs_error_hartree"] = r.abs_error;
            d["n_evals"] = r.n_evaluations;
            d["converged"] = r.converged;
            out.append(d);
          }
          return out;
        },
        py::arg("d_min") = 0.2, py::arg("d_max") = 2.5, py::arg("step") = 0.05,
        py::arg("config") = VqeConfig{}, py::arg("jobs") = 1);

  m.def("run_circuit",
        [](const std::string& text) {
          const auto c = parse_circuit_text(text);
          const Statevector psi = run_circuit(c, Statevector(c.n_qubits()));
          return amplitudes(psi);
        },
        py::arg("text"), "Final statevector of a circuit in text form, started from |0...0>.");

  m.def("sample_circuit",
        [](const std::string& text, std::size_t shots, std::uint64_t seed) {
          const auto c = parse_circuit_text(text);
          return sample_measurements(run_circuit(c, Statevector(c.n_qubits())), shots, seed);
        },
        py::arg("text"), py::arg("shots"), py::arg("seed") = 7);
}
